#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "rcc/census.hpp"
#include "rcc/complex.hpp"
#include "rcc/graph.hpp"
#include "rcc/occurrence.hpp"

namespace rcc {

// Per-length inclusion probabilities given directly.
struct UniformProbability {
    std::map<int, double> p_by_length;  // lengths not listed get probability 0
};

// Ask for an expected total cell count instead: a census pass estimates
// per-length cycle counts, lengths observed more than `threshold` times
// share the budget `nu` equally, and per-length probabilities follow.
struct ExpectedCells {
    double nu = 0.0;
    long long threshold = 0;
};

struct SamplingConfig {
    int trees = 1;
    std::variant<UniformProbability, ExpectedCells> mode;
    RhoApproximation approximation = RhoApproximation::Fast;
    std::uint64_t seed = 0;
    std::optional<double> q;  // edge probability; MLE of the graph when absent
};

struct LiftingReport {
    std::map<int, long long> cells_by_length;  // distinct cells in the result
    std::vector<int> undersampled_lengths;     // lengths whose correction hit 1
    long long clamp_count = 0;                 // occurrence probabilities clamped at 1
    long long duplicate_hits = 0;              // selections of an already-kept cell
    std::map<int, double> applied_probability; // per-length targets actually used
};

// Per-tree selection probability that turns an overall inclusion target P
// into s independent chances: rho' = (1 - (1-P)^(1/s)) / rho.  A cycle with
// occurrence probability rho then ends up included with probability exactly
// P across s trees.  Values above 1 mean the target is unreachable at this
// tree count (undersampling); callers clamp and report.
double selection_probability(double target_p, double rho, int trees);

// Turns census estimates into per-length probabilities for an expected
// total of nu cells.  Lengths with at most `threshold` observations are
// dropped; an empty result is an error.
std::map<int, double> plan_expected_cells(const CycleCensus& census, double nu,
                                          long long threshold);

// Draws cfg.trees uniform spanning trees and keeps each induced cycle with
// its per-tree selection probability; kept cycles become the 2-cells of the
// result (set semantics, repeats recorded as duplicate_hits).  Tree i runs
// on a seed derived from the stage seed and i, and trees are merged in
// index order, so results are independent of the thread count.  In
// ExpectedCells mode the census pass and the sampling pass use separate
// stage seeds derived from cfg.seed.
std::pair<CellComplex2, LiftingReport> sample_lifting(const Graph& g, const SamplingConfig& cfg,
                                                      int threads = 1);

// Same sampler with the occurrence probability supplied from outside
// (e.g. an exact oracle); cfg.approximation is ignored.
std::pair<CellComplex2, LiftingReport> sample_lifting_with_rho(
    const Graph& g, const SamplingConfig& cfg,
    const std::function<double(const Cycle&)>& rho_of, int threads = 1);

}  // namespace rcc
