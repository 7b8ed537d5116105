#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rcc/errors.hpp"
#include "rcc/graph.hpp"
#include "rcc/occurrence.hpp"

namespace rcc {

// Per-length simple-cycle statistics gathered from a batch of uniform
// spanning trees.
struct CycleCensus {
    int node_count = 0;
    std::vector<double> estimate;        // cycle count estimates, indexed by length
    std::vector<long long> occurrences;  // induced-cycle observations per length
    int trees = 0;
    std::uint64_t seed = 0;
    long long clamped_rho = 0;  // occurrence probabilities clamped at 1

    double estimate_at(int l) const;
    long long occurrences_at(int l) const;
};

// Draws `trees` uniform spanning trees and converts every induced cycle
// into an inverse-probability-weighted count: an observed cycle c adds
// 1/(rho_c * trees) at its length.  Repeated observations of one cycle
// contribute every time, which is exactly what makes the estimator
// unbiased.  q defaults to the maximum-likelihood edge probability.
// Tree i runs on derive_seed(seed, i), and per-length totals are reduced
// in tree order with compensated summation, so the result is independent
// of the thread count.
CycleCensus estimate_counts(const Graph& g, int trees, RhoApproximation approximation,
                            std::uint64_t seed, std::optional<double> q = std::nullopt,
                            int threads = 1);

// Number of length-l simple cycles in the complete graph: C(n, l)(l-1)!/2.
// Zero outside 3 <= l <= n.
mpz_class count_complete(int n, int l);

// Expected number of length-l simple cycles in a Bernoulli random graph:
// count_complete(n, l) * p^l.  Computed in log space; may still overflow
// to infinity for large n, which callers accept.
double apriori_count_er(int n, double p, int l);
double log10_apriori_count_er(int n, double p, int l);

// Exact per-length counts by depth-first search from each start node,
// visiting only larger node ids so every cycle is found once.  The budget
// caps visited path extensions; exceeding it raises budget_exceeded.
std::map<int, long long> exact_counts(const Graph& g, long long budget = 50'000'000);

// Closed-form figure for the number of spanning trees needed on the
// complete graph before a Hamiltonian cell is induced, as log10 of
// n^(n-2) / ((n!/2) (n-2)^2).  A direct route through the exact occurrence
// probability n^(3-n) gives a value (n-2)^2 times larger; the acceptance
// checks report both.
double log10_hamiltonian_sampling_cost_closed_form(int n);

// CSV with one row per length 3..n: length,estimate,occurrences,apriori
// (apriori uses the supplied edge probability) plus an exact column when
// reference counts are given.
std::string census_csv(const CycleCensus& census, double q,
                       const std::map<int, long long>* exact = nullptr);

}  // namespace rcc
