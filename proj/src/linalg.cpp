#include "rcc/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace rcc {

mpz_class determinant(std::vector<std::vector<mpz_class>> m) {
    const int n = static_cast<int>(m.size());
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("matrix must be square");
    if (n == 0) return 1;

    int sign = 1;
    mpz_class prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (m[i][k] != 0) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : mpz_class(-m[n - 1][n - 1]);
}

mpz_class determinant(const IntMatrix& m) {
    if (m.rows != m.cols) throw std::invalid_argument("matrix must be square");
    std::vector<std::vector<mpz_class>> work(m.rows, std::vector<mpz_class>(m.cols));
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) work[r][c] = static_cast<long>(m.at(r, c));
    return determinant(std::move(work));
}

int rank(const IntMatrix& m) {
    std::vector<std::vector<mpz_class>> work(m.rows, std::vector<mpz_class>(m.cols));
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) work[r][c] = static_cast<long>(m.at(r, c));

    const int rows = m.rows, cols = m.cols;
    int rk = 0;
    mpz_class prev = 1;
    std::vector<int> col_order(cols);
    for (int c = 0; c < cols; ++c) col_order[c] = c;

    for (int k = 0; k < rows && k < cols; ++k) {
        int pr = -1, pc = -1;
        for (int i = k; i < rows && pr < 0; ++i)
            for (int j = k; j < cols; ++j)
                if (work[i][col_order[j]] != 0) {
                    pr = i;
                    pc = j;
                    break;
                }
        if (pr < 0) break;
        std::swap(work[k], work[pr]);
        std::swap(col_order[k], col_order[pc]);
        ++rk;
        for (int i = k + 1; i < rows; ++i) {
            for (int j = k + 1; j < cols; ++j) {
                auto& x = work[i][col_order[j]];
                x = x * work[k][col_order[k]] - work[i][col_order[k]] * work[k][col_order[j]];
                mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
            }
            work[i][col_order[k]] = 0;
        }
        prev = work[k][col_order[k]];
    }
    return rk;
}

std::vector<mpq_class> solve_linear(std::vector<std::vector<mpq_class>> a,
                                    std::vector<mpq_class> b) {
    const int n = static_cast<int>(a.size());
    if (static_cast<int>(b.size()) != n) throw std::invalid_argument("dimension mismatch");
    for (const auto& row : a)
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("matrix must be square");

    for (int k = 0; k < n; ++k) {
        int pivot = -1;
        for (int i = k; i < n; ++i)
            if (a[i][k] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) throw std::invalid_argument("matrix is singular");
        std::swap(a[k], a[pivot]);
        std::swap(b[k], b[pivot]);
        for (int i = k + 1; i < n; ++i) {
            if (a[i][k] == 0) continue;
            const mpq_class f = a[i][k] / a[k][k];
            for (int j = k; j < n; ++j) a[i][j] -= f * a[k][j];
            b[i] -= f * b[k];
        }
    }
    std::vector<mpq_class> x(n);
    for (int k = n - 1; k >= 0; --k) {
        mpq_class s = b[k];
        for (int j = k + 1; j < n; ++j) s -= a[k][j] * x[j];
        x[k] = s / a[k][k];
        x[k].canonicalize();
    }
    return x;
}

}  // namespace rcc
