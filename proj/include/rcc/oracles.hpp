#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "rcc/cycle.hpp"
#include "rcc/errors.hpp"
#include "rcc/graph.hpp"

namespace rcc {

// Independent slow-but-exact references used to validate the fast paths.
// They live in the library (not the tests) so the command-line tool can
// expose them for spot checks.

// Number of spanning trees, by the matrix-tree theorem (determinant of a
// reduced Laplacian).  0 for disconnected or empty graphs, 1 for a single
// node.
mpz_class spanning_tree_count(const Graph& g);

struct TreeCountReport {
    mpz_class total;       // spanning trees of the graph
    mpz_class containing;  // spanning trees that induce the cycle
};

// Exact occurrence counting for one cycle.  A tree induces the cycle when it
// contains all but one of the cycle's edges; for each left-out edge the
// qualifying trees are counted by contracting the remaining path (multi-edges
// kept, self loops dropped) and counting the contraction's spanning trees.
// Contracting the path merges the same node set whichever cycle edge is left
// out, so one contraction count times the cycle length gives the total.
TreeCountReport tree_count_report(const Graph& g, const Cycle& c);

// containing / total as an exact rational.
mpq_class rho_exact_matrix_tree(const Graph& g, const Cycle& c);

struct MonteCarloRho {
    double estimate = 0.0;
    double standard_error = 0.0;
    long long trials = 0;
};

// Frequency with which uniform spanning trees induce the cycle.  Each trial
// draws its own generator seed from the master seed, so the result does not
// depend on the number of threads.
MonteCarloRho rho_monte_carlo(const Graph& g, const Cycle& c, long long trials,
                              std::uint64_t seed, int threads = 1);

struct RejectionSample {
    std::vector<Cycle> cycles;  // accepted draws in order, repeats possible
    long long attempts = 0;
    bool shortfall = false;  // fewer than the requested count were accepted
};

// Uniform cycles of one length by rejection: draw uniform ordered tuples of
// distinct nodes and accept those whose consecutive pairs (wrapping) are all
// edges.  Every cycle corresponds to the same number of tuples, so accepted
// draws are uniform over cycles of that length.
RejectionSample rejection_sample_cells(const Graph& g, int length, int count,
                                       std::uint64_t seed, long long max_attempts);

// Every spanning tree, as a sorted list of indices into g.edges(), in
// lexicographic order.  Throws budget_exceeded when the tree count or the
// search work grows past the budget.
std::vector<std::vector<int>> enumerate_spanning_trees(const Graph& g, long long budget);

}  // namespace rcc
