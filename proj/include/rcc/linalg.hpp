#pragma once

#include <gmpxx.h>

#include <vector>

namespace rcc {

// Dense row-major integer matrix.  Large enough for boundary operators and
// Laplacians at the scales this project works at.
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<long long> a;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}

    long long& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    long long at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
};

// Exact determinant by fraction-free (Bareiss) elimination: every division
// is by the previous pivot and leaves an integer, so no rationals appear.
mpz_class determinant(const IntMatrix& m);
mpz_class determinant(std::vector<std::vector<mpz_class>> m);

// Rank over the rationals.  Integer input, so the same fraction-free
// elimination applies, with full pivoting to skip zero columns.
int rank(const IntMatrix& m);

// Solves A x = b exactly by rational Gaussian elimination.  A must be
// square and nonsingular.
std::vector<mpq_class> solve_linear(std::vector<std::vector<mpq_class>> a,
                                    std::vector<mpq_class> b);

}  // namespace rcc
