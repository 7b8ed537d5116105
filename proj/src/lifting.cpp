#include "rcc/lifting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

#include "rcc/parallel.hpp"
#include "rcc/rng.hpp"
#include "rcc/spanning_tree.hpp"

namespace rcc {

double selection_probability(double target_p, double rho, int trees) {
    if (!(target_p >= 0.0 && target_p <= 1.0))
        throw std::invalid_argument("inclusion probability must lie in [0, 1]");
    if (!(rho > 0.0 && rho <= 1.0))
        throw std::invalid_argument("occurrence probability must lie in (0, 1]");
    if (trees < 1) throw std::invalid_argument("need at least one tree");
    if (target_p == 0.0) return 0.0;
    return -std::expm1(std::log1p(-target_p) / trees) / rho;
}

std::map<int, double> plan_expected_cells(const CycleCensus& census, double nu,
                                          long long threshold) {
    if (!(nu >= 0.0)) throw std::invalid_argument("expected cell count must be non-negative");
    if (threshold < 0) throw std::invalid_argument("occurrence threshold must be non-negative");
    std::vector<int> eligible;
    for (int l = 3; l <= census.node_count; ++l)
        if (census.occurrences_at(l) > threshold) eligible.push_back(l);
    if (eligible.empty()) throw std::runtime_error("no length exceeded occurrence threshold");

    const double per_length = nu / static_cast<double>(eligible.size());
    std::map<int, double> p;
    for (int l : eligible) p[l] = std::min(1.0, per_length / census.estimate_at(l));
    return p;
}

namespace {

struct TreeOutcome {
    std::vector<Cycle> kept;
    std::vector<int> undersampled;
    long long clamps = 0;
};

void check_probability_map(const std::map<int, double>& p, int n) {
    for (const auto& [l, prob] : p) {
        if (l < 3 || l > n)
            throw std::invalid_argument("inclusion probability given for impossible length " +
                                        std::to_string(l));
        if (!(prob >= 0.0 && prob <= 1.0))
            throw std::invalid_argument("inclusion probability must lie in [0, 1]");
    }
}

std::pair<CellComplex2, LiftingReport> run_sampling(
    const Graph& g, const SamplingConfig& cfg, const std::map<int, double>& p_by_length,
    const std::function<double(const Cycle&)>* rho_of, std::uint64_t stage_seed, int threads) {
    const int n = g.node_count();
    const double qq = cfg.q ? *cfg.q : (n >= 2 ? mle_edge_probability(g) : 0.0);

    const auto outcomes = run_indexed(cfg.trees, threads, [&](long long i) {
        TreeOutcome outcome;
        const std::uint64_t tree_seed = derive_seed(stage_seed, static_cast<std::uint64_t>(i));
        const RootedSpanningTree t = wilson_ust(g, 0, derive_seed(tree_seed, 0));
        Rng select(derive_seed(tree_seed, 1));
        const auto chords = non_tree_edges(g, t);
        const auto lcas = offline_lca(t, chords);
        for (std::size_t e = 0; e < chords.size(); ++e) {
            const auto [u, v] = chords[e];
            const int lca = lcas[e];
            const int l = t.depth[u] + t.depth[v] - 2 * t.depth[lca] + 1;
            const auto it = p_by_length.find(l);
            if (it == p_by_length.end() || it->second == 0.0) continue;

            double rho;
            Cycle cyc;  // materialized lazily; empty when not yet needed
            if (rho_of) {
                cyc = induced_cycle(t, u, v);
                rho = (*rho_of)(cyc);
                if (!(rho > 0.0 && rho <= 1.0))
                    throw std::invalid_argument("supplied occurrence probability outside (0, 1]");
            } else {
                double log_rho;
                if (cfg.approximation == RhoApproximation::Fast) {
                    const PathTerms terms = path_components(t, u, v, lca);
                    const double closing = static_cast<double>(t.degree[u] - 1) *
                                           static_cast<double>(t.degree[v] - 1);
                    log_rho = log_rho_approx_from_terms(terms.sigma + closing, terms.log_pi, n, qq, l);
                } else {
                    cyc = induced_cycle(t, u, v);
                    log_rho = log_rho_estimated(cyc, g, qq);
                }
                if (log_rho > 0.0) {
                    ++outcome.clamps;
                    rho = 1.0;
                } else {
                    rho = std::exp(log_rho);
                    if (rho <= 0.0) rho = std::numeric_limits<double>::min();
                }
            }

            double keep_p = selection_probability(it->second, rho, cfg.trees);
            if (keep_p > 1.0) {
                outcome.undersampled.push_back(l);
                keep_p = 1.0;
            }
            if (select.bernoulli(keep_p)) {
                if (cyc.nodes.empty()) cyc = induced_cycle(t, u, v);
                outcome.kept.push_back(std::move(cyc));
            }
        }
        return outcome;
    });

    LiftingReport report;
    report.applied_probability = p_by_length;
    std::set<Cycle> cells;
    std::set<int> undersampled;
    for (const TreeOutcome& outcome : outcomes) {
        report.clamp_count += outcome.clamps;
        undersampled.insert(outcome.undersampled.begin(), outcome.undersampled.end());
        for (const Cycle& c : outcome.kept)
            if (!cells.insert(c).second) ++report.duplicate_hits;
    }
    report.undersampled_lengths.assign(undersampled.begin(), undersampled.end());
    for (const Cycle& c : cells) ++report.cells_by_length[c.length()];

    CellComplex2 cx(g, std::vector<Cycle>(cells.begin(), cells.end()));
    return {std::move(cx), std::move(report)};
}

std::pair<CellComplex2, LiftingReport> sample_impl(
    const Graph& g, const SamplingConfig& cfg,
    const std::function<double(const Cycle&)>* rho_of, int threads) {
    if (cfg.trees < 1) throw std::invalid_argument("need at least one tree");
    if (!g.is_connected()) throw std::invalid_argument("graph must be connected");

    std::map<int, double> p_by_length;
    if (const auto* uniform = std::get_if<UniformProbability>(&cfg.mode)) {
        check_probability_map(uniform->p_by_length, g.node_count());
        p_by_length = uniform->p_by_length;
    } else {
        const auto& expected = std::get<ExpectedCells>(cfg.mode);
        // First pass: estimate cycle counts on an independent stage seed.
        const CycleCensus census = estimate_counts(g, cfg.trees, cfg.approximation,
                                                   derive_seed(cfg.seed, 1), cfg.q, threads);
        p_by_length = plan_expected_cells(census, expected.nu, expected.threshold);
    }
    return run_sampling(g, cfg, p_by_length, rho_of, derive_seed(cfg.seed, 2), threads);
}

}  // namespace

std::pair<CellComplex2, LiftingReport> sample_lifting(const Graph& g, const SamplingConfig& cfg,
                                                      int threads) {
    return sample_impl(g, cfg, nullptr, threads);
}

std::pair<CellComplex2, LiftingReport> sample_lifting_with_rho(
    const Graph& g, const SamplingConfig& cfg,
    const std::function<double(const Cycle&)>& rho_of, int threads) {
    return sample_impl(g, cfg, &rho_of, threads);
}

}  // namespace rcc
