#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace rcc {

// Thrown by the edge-list reader; line is 1-based.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& message, int line)
        : std::runtime_error(message + " (line " + std::to_string(line) + ")"),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Simple undirected graph with contiguous node ids 0..n-1.  No self loops,
// no parallel edges.  Neighbor lists and the edge list are kept sorted so
// that iteration order is deterministic.
class Graph {
public:
    Graph() = default;

    // edges may arrive in any order and orientation; duplicates are rejected.
    Graph(int node_count, std::vector<std::pair<int, int>> edges);

    int node_count() const { return n_; }
    long long edge_count() const { return static_cast<long long>(edges_.size()); }
    int degree(int u) const { return static_cast<int>(adj_[u].size()); }
    std::span<const int> neighbors(int u) const { return adj_[u]; }
    bool has_edge(int u, int v) const;

    // Sorted ascending, each pair with first < second.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool is_connected() const;

private:
    int n_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<std::pair<int, int>> edges_;
};

struct ErdosRenyi {
    int n = 0;
    double p = 0.0;
};

struct Complete {
    int n = 0;
};

struct CompleteBipartite {
    int a = 0;
    int b = 0;
};

struct StochasticBlockModel {
    std::vector<int> block_sizes;
    // Symmetric matrix of within/between block probabilities.
    std::vector<std::vector<double>> edge_probability;
};

struct GraphModelSpec {
    std::variant<ErdosRenyi, Complete, CompleteBipartite, StochasticBlockModel> model;
    std::uint64_t seed = 0;
};

// Draws a graph from the model.  Bernoulli models consume one uniform draw
// per candidate pair in lexicographic pair order, so results are reproducible
// for a given seed regardless of platform.
Graph generate(const GraphModelSpec& spec);

// Maximum-likelihood edge probability under the Bernoulli random-graph model:
// observed edges over possible pairs.  Requires n >= 2.
double mle_edge_probability(const Graph& g);

// Edge-list text format: one "u v" pair per line, '#' starts a comment,
// blank lines are skipped.  Node count is 1 + max id.  Duplicate edges (in
// either orientation) are merged; self loops raise parse_error.
Graph load_edge_list(std::string_view text);
std::string save_edge_list(const Graph& g);

Graph load_edge_list_file(const std::string& path);
void save_edge_list_file(const Graph& g, const std::string& path);

}  // namespace rcc
