#include "rcc/occurrence.hpp"

#include <gmpxx.h>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "rcc/linalg.hpp"

namespace rcc {

namespace {

void check_gamma_domain(int n, double q, int l) {
    if (n < 3) throw std::invalid_argument("need at least 3 nodes");
    if (l < 3 || l > n) throw std::invalid_argument("cycle length out of range");
    if (!(q >= 0.0 && q <= 1.0)) throw std::invalid_argument("edge probability must lie in [0, 1]");
    if (!((n - 1) * q > 1.0))
        throw std::domain_error("mean degree (n-1)q must exceed 1");
}

double clamp_probability(double log_rho, RhoDiagnostics* diag) {
    if (log_rho > 0.0) {
        if (diag) ++diag->clamped;
        return 1.0;
    }
    const double rho = std::exp(log_rho);
    return rho > 0.0 ? rho : std::numeric_limits<double>::min();
}

void check_cycle(const Cycle& c, const Graph& g) {
    if (!is_cycle_of(c, g)) throw std::invalid_argument("not a cycle of the graph");
}

}  // namespace

double log_gamma_factor(int n, double q, int l) {
    check_gamma_domain(n, q, l);
    const double nn = n;
    const double mean_degree = (nn - 1.0) * q;
    return (l - 3) * std::log((nn - 2.0) / nn) + std::log((nn - 1.0) / nn) +
           std::log((mean_degree - 1.0) / mean_degree);
}

double gamma_factor(int n, double q, int l) { return std::exp(log_gamma_factor(n, q, l)); }

double tau_last_estimated(int dw, int n, int l) {
    if (dw < 2) throw std::invalid_argument("interior cycle nodes have degree at least 2");
    if (l < 3 || l > n) throw std::invalid_argument("cycle length out of range");
    if (l == n || dw == 2) return 1.0;
    if (n <= 3) throw std::domain_error("walk weight undefined for n <= 3 unless l == n");
    const double bias = static_cast<double>(dw - 2) / (n - 3) * static_cast<double>(n - l) / l;
    return 1.0 / (1.0 + bias);
}

double tau_last_approx(int n, double q, int l) {
    if (!(q >= 0.0 && q <= 1.0)) throw std::invalid_argument("edge probability must lie in [0, 1]");
    if (l < 3 || l > n) throw std::invalid_argument("cycle length out of range");
    if (l == n) return 1.0;
    if (n <= 3) throw std::domain_error("walk weight undefined for n <= 3 unless l == n");
    const double bias = ((n - 1) * q - 2.0) / (n - 3) * static_cast<double>(n - l) / l;
    return 1.0 / (1.0 + bias);
}

namespace {

// Shared cycle-level pieces: the sum over directed cycle edges (a, b) of
// (d(a)-1)(d(b)-1) * weight(b) and the log product of (d(w)-1) over nodes.
template <typename WeightFn>
double weighted_edge_sum(const Cycle& c, const Graph& g, WeightFn weight) {
    const int l = c.length();
    double sum = 0.0;
    for (int j = 0; j < l; ++j) {
        const int a = c.nodes[j];
        const int b = c.nodes[(j + 1) % l];
        sum += static_cast<double>(g.degree(a) - 1) * (g.degree(b) - 1) * weight(b);
    }
    return sum;
}

double log_degree_product(const Cycle& c, const Graph& g) {
    double log_pi = 0.0;
    for (int w : c.nodes) log_pi += std::log(static_cast<double>(g.degree(w) - 1));
    return log_pi;
}

}  // namespace

double log_rho_estimated(const Cycle& c, const Graph& g, double q) {
    check_cycle(c, g);
    const int n = g.node_count();
    const int l = c.length();
    const double lg = log_gamma_factor(n, q, l);
    const double sum =
        weighted_edge_sum(c, g, [&](int b) { return tau_last_estimated(g.degree(b), n, l); });
    return lg + std::log(sum) - log_degree_product(c, g);
}

double log_rho_approx(const Cycle& c, const Graph& g, double q) {
    check_cycle(c, g);
    const int n = g.node_count();
    const int l = c.length();
    const double lg = log_gamma_factor(n, q, l);
    const double sum = weighted_edge_sum(c, g, [](int) { return 1.0; });
    return lg + std::log(tau_last_approx(n, q, l)) + std::log(sum) - log_degree_product(c, g);
}

double log_rho_approx_from_terms(double sigma_cycle, double log_pi_cycle, int n, double q, int l) {
    return log_gamma_factor(n, q, l) + std::log(tau_last_approx(n, q, l)) +
           std::log(sigma_cycle) - log_pi_cycle;
}

double rho_estimated(const Cycle& c, const Graph& g, double q, RhoDiagnostics* diag) {
    return clamp_probability(log_rho_estimated(c, g, q), diag);
}

double rho_approx(const Cycle& c, const Graph& g, double q, RhoDiagnostics* diag) {
    return clamp_probability(log_rho_approx(c, g, q), diag);
}

namespace {

// Probability that a loop-erased walk from path.front() reaches
// path.back() along exactly this node sequence.  Each step weight is
// f(next) / sum of f over the current node's neighbors, where f is 1 on the
// walk's target, 0 on already-visited nodes and harmonic elsewhere.
mpq_class lrw_path_probability(const Graph& g, const std::vector<int>& path) {
    const int n = g.node_count();
    const int steps = static_cast<int>(path.size()) - 1;
    const int target = path.back();
    std::vector<char> visited(n, 0);

    mpq_class prob = 1;
    for (int i = 0; i < steps; ++i) {
        const int current = path[i];
        visited[current] = 1;

        std::vector<int> free_nodes;
        std::vector<int> index_of(n, -1);
        for (int x = 0; x < n; ++x)
            if (!visited[x] && x != target) {
                index_of[x] = static_cast<int>(free_nodes.size());
                free_nodes.push_back(x);
            }

        const int k = static_cast<int>(free_nodes.size());
        std::vector<mpq_class> f(n, 0);
        f[target] = 1;
        if (k > 0) {
            std::vector<std::vector<mpq_class>> a(k, std::vector<mpq_class>(k, 0));
            std::vector<mpq_class> b(k, 0);
            for (int r = 0; r < k; ++r) {
                const int x = free_nodes[r];
                a[r][r] = g.degree(x);
                for (int y : g.neighbors(x)) {
                    if (y == target)
                        b[r] += 1;
                    else if (index_of[y] >= 0)
                        a[r][index_of[y]] -= 1;
                }
            }
            const auto sol = solve_linear(std::move(a), std::move(b));
            for (int r = 0; r < k; ++r) f[free_nodes[r]] = sol[r];
        }

        mpq_class denom = 0;
        for (int y : g.neighbors(current)) denom += f[y];
        if (denom == 0 || f[path[i + 1]] == 0) return 0;
        prob *= f[path[i + 1]] / denom;
    }
    return prob;
}

}  // namespace

double rho_exact_lrw_along(const Graph& g, const std::vector<int>& cycle_nodes) {
    const Cycle check = Cycle::canonical(cycle_nodes);
    check_cycle(check, g);
    const int l = static_cast<int>(cycle_nodes.size());

    // Leaving out the traversal edge (j, j+1) means walking from node j
    // backwards around the cycle to node j+1.
    mpq_class rho = 0;
    for (int j = 0; j < l; ++j) {
        std::vector<int> path(l);
        for (int i = 0; i < l; ++i) path[i] = cycle_nodes[(j - i + 2 * l) % l];
        rho += lrw_path_probability(g, path);
    }
    return rho.get_d();
}

double rho_exact_lrw(const Cycle& c, const Graph& g) { return rho_exact_lrw_along(g, c.nodes); }

}  // namespace rcc
