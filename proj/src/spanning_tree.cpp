#include "rcc/spanning_tree.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "rcc/rng.hpp"

namespace rcc {

RootedSpanningTree RootedSpanningTree::from_parents(const Graph& g, int root,
                                                    std::vector<int> parent) {
    const int n = g.node_count();
    if (n == 0) throw std::invalid_argument("empty graph has no spanning tree");
    if (root < 0 || root >= n) throw std::invalid_argument("root out of range");
    if (static_cast<int>(parent.size()) != n)
        throw std::invalid_argument("parent array has wrong size");
    if (parent[root] != root) throw std::invalid_argument("parent[root] must be root");

    std::vector<std::vector<int>> children(n);
    for (int u = 0; u < n; ++u) {
        if (u == root) continue;
        const int p = parent[u];
        if (p < 0 || p >= n || p == u) throw std::invalid_argument("invalid parent pointer");
        if (!g.has_edge(u, p)) throw std::invalid_argument("tree edge missing from graph");
        children[p].push_back(u);
    }

    RootedSpanningTree t;
    t.root = root;
    t.parent = std::move(parent);
    t.depth.assign(n, 0);
    t.degree.resize(n);
    for (int u = 0; u < n; ++u) t.degree[u] = g.degree(u);
    t.sigma_to_root.assign(n, 0.0);
    t.log_pi_to_root.assign(n, 0.0);
    t.pi_zero_to_root.assign(n, 0);

    const auto factor = [&](int w) { return static_cast<double>(t.degree[w] - 1); };
    if (t.degree[root] >= 2)
        t.log_pi_to_root[root] = std::log(factor(root));
    else
        t.pi_zero_to_root[root] = 1;

    int reached = 1;
    std::vector<int> stack = {root};
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int u : children[v]) {
            t.depth[u] = t.depth[v] + 1;
            t.sigma_to_root[u] = t.sigma_to_root[v] + factor(v) * factor(u);
            t.log_pi_to_root[u] = t.log_pi_to_root[v];
            t.pi_zero_to_root[u] = t.pi_zero_to_root[v];
            if (t.degree[u] >= 2)
                t.log_pi_to_root[u] += std::log(factor(u));
            else
                t.pi_zero_to_root[u] += 1;
            ++reached;
            stack.push_back(u);
        }
    }
    if (reached != n) throw std::invalid_argument("parent array does not span the graph");
    return t;
}

RootedSpanningTree wilson_ust(const Graph& g, int root, std::uint64_t seed) {
    const int n = g.node_count();
    if (n == 0) throw std::invalid_argument("empty graph has no spanning tree");
    if (root < 0 || root >= n) throw std::invalid_argument("root out of range");
    if (!g.is_connected()) throw std::invalid_argument("graph must be connected");

    Rng rng(seed);
    std::vector<int> next(n, -1);
    std::vector<char> in_tree(n, 0);
    next[root] = root;
    in_tree[root] = 1;
    for (int start = 0; start < n; ++start) {
        if (in_tree[start]) continue;
        // Random walk until the current tree is hit; loops are erased
        // implicitly because next[] keeps only the latest exit.
        int u = start;
        while (!in_tree[u]) {
            const auto nb = g.neighbors(u);
            next[u] = nb[rng.uniform_below(nb.size())];
            u = next[u];
        }
        u = start;
        while (!in_tree[u]) {
            in_tree[u] = 1;
            u = next[u];
        }
    }
    return RootedSpanningTree::from_parents(g, root, std::move(next));
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void merge_into(int child_root, int new_root) { parent[find(child_root)] = find(new_root); }
};

}  // namespace

std::vector<int> offline_lca(const RootedSpanningTree& t,
                             const std::vector<std::pair<int, int>>& queries) {
    const int n = t.node_count();
    std::vector<std::vector<int>> children(n);
    for (int u = 0; u < n; ++u)
        if (u != t.root) children[t.parent[u]].push_back(u);

    std::vector<std::vector<std::pair<int, int>>> pending(n);  // node -> (other, query index)
    for (int qi = 0; qi < static_cast<int>(queries.size()); ++qi) {
        auto [u, v] = queries[qi];
        if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("query node out of range");
        pending[u].emplace_back(v, qi);
        if (u != v) pending[v].emplace_back(u, qi);
    }

    std::vector<int> answer(queries.size(), -1);
    UnionFind uf(n);
    std::vector<int> ancestor(n);
    std::iota(ancestor.begin(), ancestor.end(), 0);
    std::vector<char> done(n, 0);

    // Post-order traversal with an explicit stack: a node is expanded on
    // first visit and finalized on second.
    std::vector<std::pair<int, bool>> stack = {{t.root, false}};
    while (!stack.empty()) {
        auto [u, finalize] = stack.back();
        stack.pop_back();
        if (!finalize) {
            stack.emplace_back(u, true);
            for (int c : children[u]) stack.emplace_back(c, false);
            continue;
        }
        done[u] = 1;
        for (auto [other, qi] : pending[u])
            if (done[other]) answer[qi] = ancestor[uf.find(other)];
        // Merge into the parent only after answering, and before any node
        // outside this subtree is finalized; queries landing there must see
        // this subtree represented by the parent.
        if (u != t.root) {
            uf.merge_into(u, t.parent[u]);
            ancestor[uf.find(t.parent[u])] = t.parent[u];
        }
    }
    return answer;
}

PathTerms path_components(const RootedSpanningTree& t, int u, int v, int lca) {
    const auto d = [&](int w) { return static_cast<double>(t.degree[w] - 1); };
    PathTerms out;
    out.sigma = t.sigma_to_root[u] + t.sigma_to_root[v] - 2.0 * t.sigma_to_root[lca];
    const int zeros = t.pi_zero_to_root[u] + t.pi_zero_to_root[v] - 2 * t.pi_zero_to_root[lca] +
                      (t.degree[lca] <= 1 ? 1 : 0);
    if (zeros > 0) {
        out.log_pi = -std::numeric_limits<double>::infinity();
        return out;
    }
    out.log_pi = t.log_pi_to_root[u] + t.log_pi_to_root[v] - 2.0 * t.log_pi_to_root[lca] +
                 (t.degree[lca] >= 2 ? std::log(d(lca)) : 0.0);
    return out;
}

Cycle induced_cycle(const RootedSpanningTree& t, int u, int v) {
    if (u == v) throw std::invalid_argument("cycle endpoints must differ");
    if (t.contains_edge(u, v)) throw std::invalid_argument("(u, v) is a tree edge");
    std::vector<int> up_from_u, up_from_v;
    int a = u, b = v;
    while (t.depth[a] > t.depth[b]) {
        up_from_u.push_back(a);
        a = t.parent[a];
    }
    while (t.depth[b] > t.depth[a]) {
        up_from_v.push_back(b);
        b = t.parent[b];
    }
    while (a != b) {
        up_from_u.push_back(a);
        up_from_v.push_back(b);
        a = t.parent[a];
        b = t.parent[b];
    }
    up_from_u.push_back(a);  // the common ancestor
    up_from_u.insert(up_from_u.end(), up_from_v.rbegin(), up_from_v.rend());
    return Cycle::canonical(std::move(up_from_u));
}

std::vector<std::pair<int, int>> non_tree_edges(const Graph& g, const RootedSpanningTree& t) {
    std::vector<std::pair<int, int>> out;
    out.reserve(g.edge_count() - (g.node_count() - 1));
    for (auto [u, v] : g.edges())
        if (!t.contains_edge(u, v)) out.emplace_back(u, v);
    return out;
}

}  // namespace rcc
