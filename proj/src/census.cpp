#include "rcc/census.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "rcc/parallel.hpp"
#include "rcc/rng.hpp"
#include "rcc/spanning_tree.hpp"

namespace rcc {

double CycleCensus::estimate_at(int l) const {
    if (l < 0 || l >= static_cast<int>(estimate.size())) return 0.0;
    return estimate[l];
}

long long CycleCensus::occurrences_at(int l) const {
    if (l < 0 || l >= static_cast<int>(occurrences.size())) return 0;
    return occurrences[l];
}

namespace {

struct TreeTally {
    std::vector<double> weight;
    std::vector<long long> occ;
    long long clamped = 0;
};

double clamped_rho_from_log(double log_rho, long long* clamped) {
    if (log_rho > 0.0) {
        ++*clamped;
        return 1.0;
    }
    const double rho = std::exp(log_rho);
    return rho > 0.0 ? rho : std::numeric_limits<double>::min();
}

}  // namespace

CycleCensus estimate_counts(const Graph& g, int trees, RhoApproximation approximation,
                            std::uint64_t seed, std::optional<double> q, int threads) {
    if (trees < 1) throw std::invalid_argument("need at least one tree");
    if (!g.is_connected()) throw std::invalid_argument("graph must be connected");
    const int n = g.node_count();
    const double qq = q ? *q : (n >= 2 ? mle_edge_probability(g) : 0.0);

    const auto tallies = run_indexed(trees, threads, [&](long long i) {
        TreeTally tally;
        tally.weight.assign(n + 1, 0.0);
        tally.occ.assign(n + 1, 0);
        const RootedSpanningTree t = wilson_ust(g, 0, derive_seed(seed, static_cast<std::uint64_t>(i)));
        const auto chords = non_tree_edges(g, t);
        const auto lcas = offline_lca(t, chords);
        for (std::size_t e = 0; e < chords.size(); ++e) {
            const auto [u, v] = chords[e];
            const int lca = lcas[e];
            const int l = t.depth[u] + t.depth[v] - 2 * t.depth[lca] + 1;
            double log_rho;
            if (approximation == RhoApproximation::Fast) {
                const PathTerms terms = path_components(t, u, v, lca);
                const double closing =
                    static_cast<double>(t.degree[u] - 1) * static_cast<double>(t.degree[v] - 1);
                log_rho = log_rho_approx_from_terms(terms.sigma + closing, terms.log_pi, n, qq, l);
            } else {
                log_rho = log_rho_estimated(induced_cycle(t, u, v), g, qq);
            }
            const double rho = clamped_rho_from_log(log_rho, &tally.clamped);
            tally.weight[l] += 1.0 / (rho * trees);
            tally.occ[l] += 1;
        }
        return tally;
    });

    CycleCensus census;
    census.node_count = n;
    census.trees = trees;
    census.seed = seed;
    census.estimate.assign(n + 1, 0.0);
    census.occurrences.assign(n + 1, 0);
    // Compensated summation per length, always in tree order.
    std::vector<double> carry(n + 1, 0.0);
    for (const TreeTally& tally : tallies) {
        census.clamped_rho += tally.clamped;
        for (int l = 0; l <= n; ++l) {
            census.occurrences[l] += tally.occ[l];
            const double y = tally.weight[l] - carry[l];
            const double s = census.estimate[l] + y;
            carry[l] = (s - census.estimate[l]) - y;
            census.estimate[l] = s;
        }
    }
    return census;
}

mpz_class count_complete(int n, int l) {
    if (n < 3 || l < 3 || l > n) return 0;
    mpz_class binom, fact;
    mpz_bin_uiui(binom.get_mpz_t(), n, l);
    mpz_fac_ui(fact.get_mpz_t(), l - 1);
    return binom * fact / 2;
}

double log10_apriori_count_er(int n, double p, int l) {
    if (n < 3 || l < 3 || l > n) return -std::numeric_limits<double>::infinity();
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must lie in [0, 1]");
    if (p == 0.0) return -std::numeric_limits<double>::infinity();
    const double ln10 = std::log(10.0);
    const double log_count = std::lgamma(n + 1.0) - std::lgamma(l + 1.0) - std::lgamma(n - l + 1.0) +
                             std::lgamma(static_cast<double>(l)) - std::log(2.0);
    return (log_count + l * std::log(p)) / ln10;
}

double apriori_count_er(int n, double p, int l) {
    const double lg = log10_apriori_count_er(n, p, l);
    return std::pow(10.0, lg);
}

namespace {

struct CycleSearch {
    const Graph& g;
    long long budget;
    long long work = 0;
    std::map<int, long long> counts;
    std::vector<int> path;
    std::vector<char> on_path;

    explicit CycleSearch(const Graph& graph, long long b)
        : g(graph), budget(b), on_path(graph.node_count(), 0) {}

    void run() {
        for (int s = 0; s < g.node_count(); ++s) {
            path = {s};
            on_path.assign(g.node_count(), 0);
            on_path[s] = 1;
            extend(s, s);
        }
    }

    void extend(int start, int u) {
        for (int w : g.neighbors(u)) {
            if (w == start) {
                // Closing edge back to the smallest node; count each cycle
                // once by fixing the traversal direction.
                if (path.size() >= 3 && path[1] < path.back()) ++counts[static_cast<int>(path.size())];
                continue;
            }
            if (w < start || on_path[w]) continue;
            if (++work > budget) throw budget_exceeded("cycle enumeration budget exhausted");
            path.push_back(w);
            on_path[w] = 1;
            extend(start, w);
            on_path[w] = 0;
            path.pop_back();
        }
    }
};

}  // namespace

std::map<int, long long> exact_counts(const Graph& g, long long budget) {
    CycleSearch search(g, budget);
    search.run();
    return search.counts;
}

double log10_hamiltonian_sampling_cost_closed_form(int n) {
    if (n < 3) throw std::invalid_argument("need at least 3 nodes");
    const double ln10 = std::log(10.0);
    const double log_yield = std::lgamma(n + 1.0) - std::log(2.0) + 2.0 * std::log(n - 2.0) -
                             (n - 2.0) * std::log(static_cast<double>(n));
    return -log_yield / ln10;
}

namespace {

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

}  // namespace

std::string census_csv(const CycleCensus& census, double q, const std::map<int, long long>* exact) {
    std::string out = "length,estimate,occurrences,apriori";
    if (exact) out += ",exact";
    out += '\n';
    for (int l = 3; l <= census.node_count; ++l) {
        out += std::to_string(l);
        out += ',';
        out += format_double(census.estimate_at(l));
        out += ',';
        out += std::to_string(census.occurrences_at(l));
        out += ',';
        out += format_double(apriori_count_er(census.node_count, q, l));
        if (exact) {
            out += ',';
            const auto it = exact->find(l);
            out += std::to_string(it == exact->end() ? 0LL : it->second);
        }
        out += '\n';
    }
    return out;
}

}  // namespace rcc
