#include "rcc/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "rcc/linalg.hpp"
#include "rcc/parallel.hpp"
#include "rcc/rng.hpp"
#include "rcc/spanning_tree.hpp"

namespace rcc {

namespace {

// Spanning tree count of a multigraph given as a symmetric multiplicity
// matrix: determinant of the Laplacian with one row and column removed.
mpz_class multigraph_tree_count(const std::vector<std::vector<long long>>& weight) {
    const int n = static_cast<int>(weight.size());
    if (n == 0) return 0;
    if (n == 1) return 1;
    IntMatrix lap(n - 1, n - 1);
    for (int i = 1; i < n; ++i) {
        long long deg = 0;
        for (int j = 0; j < n; ++j) deg += weight[i][j];
        for (int j = 1; j < n; ++j) lap.at(i - 1, j - 1) = (i == j) ? deg : -weight[i][j];
    }
    return determinant(lap);
}

}  // namespace

mpz_class spanning_tree_count(const Graph& g) {
    const int n = g.node_count();
    if (n == 0) return 0;
    std::vector<std::vector<long long>> weight(n, std::vector<long long>(n, 0));
    for (auto [u, v] : g.edges()) {
        weight[u][v] = 1;
        weight[v][u] = 1;
    }
    return multigraph_tree_count(weight);
}

TreeCountReport tree_count_report(const Graph& g, const Cycle& c) {
    if (!is_cycle_of(c, g)) throw std::invalid_argument("not a cycle of the graph");
    const int n = g.node_count();
    const int l = c.length();

    // Merge the cycle's nodes into new node 0; everything else keeps its
    // relative order.  Edges inside the merged set become self loops and are
    // skipped; all other edges keep multiplicity.
    std::vector<int> new_id(n, -1);
    for (int u : c.nodes) new_id[u] = 0;
    int next = 1;
    for (int u = 0; u < n; ++u)
        if (new_id[u] < 0) new_id[u] = next++;

    std::vector<std::vector<long long>> weight(next, std::vector<long long>(next, 0));
    for (auto [u, v] : g.edges()) {
        const int a = new_id[u], b = new_id[v];
        if (a == b) continue;
        ++weight[a][b];
        ++weight[b][a];
    }

    TreeCountReport report;
    report.total = spanning_tree_count(g);
    report.containing = l * multigraph_tree_count(weight);
    return report;
}

mpq_class rho_exact_matrix_tree(const Graph& g, const Cycle& c) {
    const TreeCountReport report = tree_count_report(g, c);
    if (report.total == 0) throw std::invalid_argument("graph has no spanning tree");
    mpq_class rho(report.containing, report.total);
    rho.canonicalize();
    return rho;
}

MonteCarloRho rho_monte_carlo(const Graph& g, const Cycle& c, long long trials,
                              std::uint64_t seed, int threads) {
    if (trials < 1) throw std::invalid_argument("need at least one trial");
    if (!is_cycle_of(c, g)) throw std::invalid_argument("not a cycle of the graph");
    const int l = c.length();

    const auto hits = run_indexed(trials, threads, [&](long long i) -> char {
        const RootedSpanningTree t = wilson_ust(g, 0, derive_seed(seed, static_cast<std::uint64_t>(i)));
        int present = 0;
        for (int j = 0; j < l; ++j)
            if (t.contains_edge(c.nodes[j], c.nodes[(j + 1) % l])) ++present;
        return present == l - 1 ? 1 : 0;
    });

    long long k = 0;
    for (char h : hits) k += h;
    MonteCarloRho out;
    out.trials = trials;
    out.estimate = static_cast<double>(k) / static_cast<double>(trials);
    out.standard_error =
        std::sqrt(out.estimate * (1.0 - out.estimate) / static_cast<double>(trials));
    return out;
}

RejectionSample rejection_sample_cells(const Graph& g, int length, int count,
                                       std::uint64_t seed, long long max_attempts) {
    const int n = g.node_count();
    if (length < 3 || length > n) throw std::invalid_argument("cycle length out of range");
    if (count < 0) throw std::invalid_argument("sample count must be non-negative");

    Rng rng(seed);
    std::vector<int> pool(n);
    std::iota(pool.begin(), pool.end(), 0);

    RejectionSample out;
    out.cycles.reserve(count);
    while (static_cast<int>(out.cycles.size()) < count && out.attempts < max_attempts) {
        ++out.attempts;
        // Partial Fisher-Yates: the first `length` entries become a uniform
        // ordered tuple of distinct nodes.
        for (int i = 0; i < length; ++i) {
            const int j = i + static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(n - i)));
            std::swap(pool[i], pool[j]);
        }
        bool ok = true;
        for (int i = 0; i < length && ok; ++i)
            ok = g.has_edge(pool[i], pool[(i + 1) % length]);
        if (ok)
            out.cycles.push_back(Cycle::canonical(std::vector<int>(pool.begin(), pool.begin() + length)));
    }
    out.shortfall = static_cast<int>(out.cycles.size()) < count;
    return out;
}

std::vector<std::vector<int>> enumerate_spanning_trees(const Graph& g, long long budget) {
    const int n = g.node_count();
    const int m = static_cast<int>(g.edge_count());
    std::vector<std::vector<int>> trees;
    if (n == 0) return trees;
    if (n == 1) {
        trees.push_back({});
        return trees;
    }

    // DFS over edge indices in ascending order; each tree is emitted exactly
    // once with its edge list sorted.  Union-find state is rebuilt on the
    // path into each branch (cheap at oracle scale).
    std::vector<int> chosen;
    std::vector<int> uf(n);
    std::iota(uf.begin(), uf.end(), 0);
    long long work = 0;
    const long long work_limit = std::max<long long>(budget * n, 1LL << 22);

    const auto find = [&](int x) {
        while (uf[x] != x) {
            uf[x] = uf[uf[x]];
            x = uf[x];
        }
        return x;
    };

    const auto dfs = [&](auto&& self, int edge_idx) -> void {
        if (++work > work_limit) throw budget_exceeded("spanning tree search too large");
        if (static_cast<int>(chosen.size()) == n - 1) {
            if (static_cast<long long>(trees.size()) >= budget)
                throw budget_exceeded("too many spanning trees");
            trees.push_back(chosen);
            return;
        }
        const int needed = n - 1 - static_cast<int>(chosen.size());
        if (m - edge_idx < needed) return;

        const auto [u, v] = g.edges()[edge_idx];
        const int ru = find(u), rv = find(v);
        if (ru != rv) {
            uf[ru] = rv;
            chosen.push_back(edge_idx);
            self(self, edge_idx + 1);
            chosen.pop_back();
            // Undo by rebuilding; path compression makes precise rollback
            // awkward and the sizes here are small.
            std::iota(uf.begin(), uf.end(), 0);
            for (int e : chosen) {
                const auto [a, b] = g.edges()[e];
                uf[find(a)] = find(b);
            }
        }
        self(self, edge_idx + 1);
    };

    dfs(dfs, 0);
    std::sort(trees.begin(), trees.end());
    return trees;
}

}  // namespace rcc
