#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "rcc/cycle.hpp"
#include "rcc/graph.hpp"

namespace rcc {

// Spanning tree of a host graph, rooted, with per-node partial terms that
// let cycle weights be composed in O(1) per non-tree edge.
//
// For the path from the root r to a node u (inclusive of both endpoints):
//   sigma_to_root[u]   = sum over path edges (a, b) of (d(a)-1)(d(b)-1)
//   pi over path nodes = product over path nodes w of (d(w)-1)
// where d() is the degree in the host graph.  The product is stored in log
// space as log_pi_to_root plus a separate count of zero factors from
// degree-1 nodes, so deep paths neither overflow nor poison the logs.
struct RootedSpanningTree {
    int root = 0;
    std::vector<int> parent;  // parent[root] == root
    std::vector<int> depth;
    std::vector<int> degree;  // host graph degrees
    std::vector<double> sigma_to_root;
    std::vector<double> log_pi_to_root;  // sum of log(d(w)-1) over path nodes with d(w) >= 2
    std::vector<int> pi_zero_to_root;    // count of path nodes with d(w) == 1

    int node_count() const { return static_cast<int>(parent.size()); }
    bool contains_edge(int u, int v) const {
        return (parent[u] == v && u != root) || (parent[v] == u && v != root);
    }

    // Builds depth and the partial terms from a parent array.  Validates that
    // parent describes a spanning tree of g rooted at root.
    static RootedSpanningTree from_parents(const Graph& g, int root, std::vector<int> parent);
};

// Uniform spanning tree via loop-erased random walks (Wilson's algorithm).
// Nodes are attached in ascending id order; the walk retraces its next[]
// pointers, so loops are erased by overwriting.  Requires a connected graph.
RootedSpanningTree wilson_ust(const Graph& g, int root, std::uint64_t seed);

// Answers all lowest-common-ancestor queries in one tree traversal
// (offline union-find method).  Returns one ancestor per query pair.
std::vector<int> offline_lca(const RootedSpanningTree& t,
                             const std::vector<std::pair<int, int>>& queries);

// Combined weight terms for the tree path between the endpoints of a
// non-tree edge (u, v):
//   sigma:  sum over path edges of (d(a)-1)(d(b)-1); the closing edge
//           (u, v) itself is not included
//   log_pi: log of the product over path nodes (u..lca..v inclusive) of
//           (d(w)-1); -infinity if any factor is zero
struct PathTerms {
    double sigma = 0.0;
    double log_pi = 0.0;
};

PathTerms path_components(const RootedSpanningTree& t, int u, int v, int lca);

// The simple cycle formed by the tree path u..v plus the edge (u, v),
// in canonical form.  (u, v) must not be a tree edge.
Cycle induced_cycle(const RootedSpanningTree& t, int u, int v);

// Edges of g absent from t, in ascending edge order.
std::vector<std::pair<int, int>> non_tree_edges(const Graph& g, const RootedSpanningTree& t);

}  // namespace rcc
