#include "rcc/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "rcc/rng.hpp"

namespace rcc {

Graph::Graph(int node_count, std::vector<std::pair<int, int>> edges) : n_(node_count) {
    if (node_count < 0) throw std::invalid_argument("node count must be non-negative");
    adj_.resize(n_);
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self loops are not allowed");
        if (u > v) std::swap(u, v);
        edges_.emplace_back(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw std::invalid_argument("duplicate edge");
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
    const auto& nb = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    const int other = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::binary_search(nb.begin(), nb.end(), other);
}

bool Graph::is_connected() const {
    if (n_ <= 1) return true;
    std::vector<char> seen(n_, 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (int w : adj_[u]) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n_;
}

namespace {

void check_probability(double p, const char* what) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument(std::string(what) + " must lie in [0, 1]");
}

Graph generate_er(const ErdosRenyi& m, std::uint64_t seed) {
    if (m.n < 0) throw std::invalid_argument("node count must be non-negative");
    check_probability(m.p, "edge probability");
    Rng rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u + 1 < m.n; ++u)
        for (int v = u + 1; v < m.n; ++v)
            if (rng.bernoulli(m.p)) edges.emplace_back(u, v);
    return Graph(m.n, std::move(edges));
}

Graph generate_complete(const Complete& m) {
    if (m.n < 0) throw std::invalid_argument("node count must be non-negative");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u + 1 < m.n; ++u)
        for (int v = u + 1; v < m.n; ++v) edges.emplace_back(u, v);
    return Graph(m.n, std::move(edges));
}

Graph generate_bipartite(const CompleteBipartite& m) {
    if (m.a < 0 || m.b < 0) throw std::invalid_argument("part sizes must be non-negative");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < m.a; ++u)
        for (int v = 0; v < m.b; ++v) edges.emplace_back(u, m.a + v);
    return Graph(m.a + m.b, std::move(edges));
}

Graph generate_sbm(const StochasticBlockModel& m, std::uint64_t seed) {
    const int blocks = static_cast<int>(m.block_sizes.size());
    if (blocks == 0) return Graph(0, {});
    if (static_cast<int>(m.edge_probability.size()) != blocks)
        throw std::invalid_argument("block probability matrix has wrong size");
    int n = 0;
    std::vector<int> block_of;
    for (int b = 0; b < blocks; ++b) {
        if (m.block_sizes[b] < 0) throw std::invalid_argument("block size must be non-negative");
        if (static_cast<int>(m.edge_probability[b].size()) != blocks)
            throw std::invalid_argument("block probability matrix has wrong size");
        for (int j = 0; j < blocks; ++j) {
            check_probability(m.edge_probability[b][j], "block probability");
            if (m.edge_probability[b][j] != m.edge_probability[j][b])
                throw std::invalid_argument("block probability matrix must be symmetric");
        }
        n += m.block_sizes[b];
        block_of.insert(block_of.end(), m.block_sizes[b], b);
    }
    Rng rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u + 1 < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.bernoulli(m.edge_probability[block_of[u]][block_of[v]]))
                edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

}  // namespace

Graph generate(const GraphModelSpec& spec) {
    if (const auto* er = std::get_if<ErdosRenyi>(&spec.model)) return generate_er(*er, spec.seed);
    if (const auto* k = std::get_if<Complete>(&spec.model)) return generate_complete(*k);
    if (const auto* kb = std::get_if<CompleteBipartite>(&spec.model)) return generate_bipartite(*kb);
    return generate_sbm(std::get<StochasticBlockModel>(spec.model), spec.seed);
}

double mle_edge_probability(const Graph& g) {
    const long long n = g.node_count();
    if (n < 2) throw std::invalid_argument("edge probability is undefined for fewer than 2 nodes");
    return static_cast<double>(g.edge_count()) / (static_cast<double>(n) * (n - 1) / 2.0);
}

Graph load_edge_list(std::string_view text) {
    std::vector<std::pair<int, int>> edges;
    int max_id = -1;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        std::istringstream fields{std::string(line)};
        long long u, v;
        if (!(fields >> u)) continue;  // blank or comment-only line
        if (!(fields >> v)) throw parse_error("expected two node ids", line_no);
        std::string extra;
        if (fields >> extra) throw parse_error("trailing text after edge", line_no);
        if (u < 0 || v < 0) throw parse_error("negative node id", line_no);
        if (u > INT32_MAX || v > INT32_MAX) throw parse_error("node id too large", line_no);
        if (u == v) throw parse_error("self loop", line_no);
        int a = static_cast<int>(u), b = static_cast<int>(v);
        if (a > b) std::swap(a, b);
        edges.emplace_back(a, b);
        max_id = std::max({max_id, a, b});
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph(max_id + 1, std::move(edges));
}

std::string save_edge_list(const Graph& g) {
    std::string out;
    for (auto [u, v] : g.edges()) {
        out += std::to_string(u);
        out += ' ';
        out += std::to_string(v);
        out += '\n';
    }
    return out;
}

Graph load_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_edge_list(buf.str());
}

void save_edge_list_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << save_edge_list(g);
}

}  // namespace rcc
