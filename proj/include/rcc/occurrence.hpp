#pragma once

#include <cstdint>
#include <vector>

#include "rcc/cycle.hpp"
#include "rcc/graph.hpp"

namespace rcc {

// Which occurrence probability approximation to use.  Estimated folds the
// actual degree of each walk's final interior node into the per-edge terms;
// Fast replaces that degree by the mean degree (n-1)q so the whole cycle
// weight composes in O(1) from spanning tree partial terms.
enum class RhoApproximation { Estimated, Fast };

// Shared scale factor of both approximations:
//   ((n-2)/n)^(l-3) * ((n-1)/n) * (((n-1)q - 1)/((n-1)q))
// Defined for n >= 3, 3 <= l <= n and mean degree (n-1)q > 1.
double gamma_factor(int n, double q, int l);
double log_gamma_factor(int n, double q, int l);

// Weight of a loop-erased walk's final step into a node of degree dw after
// l-1 steps: 1 / (1 + (dw-2)/(n-3) * (n-l)/l).  Equals 1 when l == n (the
// last step is forced) or dw == 2.  Requires dw >= 2 and 3 <= l <= n.
double tau_last_estimated(int dw, int n, int l);

// Same weight with dw replaced by the mean degree (n-1)q.  Values of
// (n-1)q below 2 are accepted (the factor then exceeds 1 slightly); the
// cycle-level probabilities are clamped into (0, 1] regardless.
double tau_last_approx(int n, double q, int l);

struct RhoDiagnostics {
    long long clamped = 0;  // results that exceeded 1 before clamping
};

// Probability that a uniform spanning tree induces the cycle, approximated
// from cycle degrees.  q is the edge probability of the host model (pass the
// known value when there is one, otherwise the maximum-likelihood estimate).
// Results are clamped into (0, 1]; clamps at the top are counted in diag.
double rho_estimated(const Cycle& c, const Graph& g, double q, RhoDiagnostics* diag = nullptr);
double rho_approx(const Cycle& c, const Graph& g, double q, RhoDiagnostics* diag = nullptr);

// Log-space versions without clamping.  Values can exceed 0 (that is, a
// nominal probability above 1) for short cycles through high-degree nodes;
// callers decide how to clamp.  Deep cycles underflow a plain double, which
// is why everything downstream works with these.
double log_rho_estimated(const Cycle& c, const Graph& g, double q);
double log_rho_approx(const Cycle& c, const Graph& g, double q);

// O(1) composition for the Fast variant from spanning tree path terms.
// sigma_cycle must already include the closing edge's term
// (d(u)-1)(d(v)-1); log_pi_cycle is the log product of (d(w)-1) over the
// cycle's nodes.
double log_rho_approx_from_terms(double sigma_cycle, double log_pi_cycle, int n, double q, int l);

// Exact occurrence probability via loop-erased walk calculus: for each
// cycle edge left out, the probability that a walk started at one endpoint
// follows the remaining path exactly, with each step weight obtained from a
// rational harmonic-function solve (absorbing at the target, zero on
// visited nodes).  Independent of the matrix-tree route; used to cross
// check it.
double rho_exact_lrw(const Cycle& c, const Graph& g);

// Direction-explicit variant: walks follow cycle_nodes in the given
// orientation.  Both orientations give the same value; exposed so tests can
// verify that.
double rho_exact_lrw_along(const Graph& g, const std::vector<int>& cycle_nodes);

}  // namespace rcc
