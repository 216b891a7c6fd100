#ifndef ORTHOREP_LINALG_HPP
#define ORTHOREP_LINALG_HPP

#include <cmath>
#include <type_traits>
#include <utility>
#include <vector>

#include "orthorep/matrix.hpp"
#include "orthorep/tolerances.hpp"

namespace orthorep {

/*
 * Determinants use one algorithm per backend:
 *   - double:   LU with partial pivoting, det = sign * product of pivots.
 *   - Rational: Bareiss fraction-free elimination. Divisions are exact and
 *     integer inputs stay integer, so intermediate fractions never blow up.
 */
template <typename T>
T determinant(const Matrix<T>& a) {
    const int n = a.size();
    if (n == 0) return T(1);
    Matrix<T> m = a;

    if constexpr (std::is_same_v<T, double>) {
        double det = 1.0;
        for (int k = 0; k < n; ++k) {
            int piv = k;
            double best = std::abs(m(k, k));
            for (int i = k + 1; i < n; ++i) {
                const double v = std::abs(m(i, k));
                if (v > best) { best = v; piv = i; }
            }
            if (best == 0.0) return 0.0;
            if (piv != k) {
                for (int j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
                det = -det;
            }
            det *= m(k, k);
            for (int i = k + 1; i < n; ++i) {
                const double f = m(i, k) / m(k, k);
                for (int j = k + 1; j < n; ++j) m(i, j) -= f * m(k, j);
            }
        }
        return det;
    } else {
        int sign = 1;
        T prev(1);
        for (int k = 0; k + 1 < n; ++k) {
            if (m(k, k) == 0) {
                int piv = -1;
                for (int i = k + 1; i < n; ++i)
                    if (m(i, k) != 0) { piv = i; break; }
                if (piv < 0) return T(0);
                for (int j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
                sign = -sign;
            }
            for (int i = k + 1; i < n; ++i) {
                for (int j = k + 1; j < n; ++j)
                    m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
                m(i, k) = T(0);
            }
            prev = m(k, k);
        }
        return sign > 0 ? m(n - 1, n - 1) : T(-m(n - 1, n - 1));
    }
}

/// Solves A X = B for square X. Float backend: LU with partial pivoting,
/// pivots below tol::pivot_rel * max|A| count as zero. Rational backend:
/// exact Gaussian elimination, only an exactly zero pivot column is singular.
template <typename T>
Matrix<T> solve(const Matrix<T>& a, const Matrix<T>& b) {
    const int n = a.size();
    if (b.size() != n)
        throw Error(ErrorCode::DimensionMismatch, "solve: A and B dimensions differ");
    if (n == 0) return Matrix<T>(0);

    // Augmented [A | B], forward elimination, then back substitution.
    std::vector<std::vector<T>> m(n, std::vector<T>(2 * n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            m[i][j] = a(i, j);
            m[i][n + j] = b(i, j);
        }

    [[maybe_unused]] double pivot_floor = 0.0;
    if constexpr (std::is_same_v<T, double>)
        pivot_floor = tol::pivot_rel * to_double(a.max_norm());

    for (int k = 0; k < n; ++k) {
        int piv = -1;
        if constexpr (std::is_same_v<T, double>) {
            double best = pivot_floor;
            for (int i = k; i < n; ++i) {
                const double v = std::abs(m[i][k]);
                if (v > best) { best = v; piv = i; }
            }
        } else {
            for (int i = k; i < n; ++i)
                if (m[i][k] != 0) { piv = i; break; }
        }
        if (piv < 0)
            throw Error(ErrorCode::SingularMatrix, "solve: zero pivot column " + std::to_string(k));
        if (piv != k) std::swap(m[k], m[piv]);

        for (int i = k + 1; i < n; ++i) {
            if (m[i][k] == T(0)) continue;
            const T f = m[i][k] / m[k][k];
            m[i][k] = T(0);
            for (int j = k + 1; j < 2 * n; ++j) m[i][j] -= f * m[k][j];
        }
    }

    Matrix<T> x(n);
    for (int c = 0; c < n; ++c) {
        for (int i = n - 1; i >= 0; --i) {
            T s = m[i][n + c];
            for (int j = i + 1; j < n; ++j) s -= m[i][j] * x(j, c);
            x(i, c) = s / m[i][i];
        }
    }
    return x;
}

/// Determinant of the top-left k x k submatrix, 1 <= k <= n.
template <typename T>
T leading_principal_minor(const Matrix<T>& a, int k) {
    if (k < 1 || k > a.size())
        throw Error(ErrorCode::IndexOutOfRange,
                    "leading principal minor index " + std::to_string(k) +
                    " out of range [1," + std::to_string(a.size()) + "]");
    return determinant(a.leading_submatrix(k));
}

/// Q from a Householder QR of A with diag(R) normalized positive. The
/// positive-diagonal convention makes Q unique, and turns QR of an i.i.d.
/// Gaussian matrix into a Haar-distributed orthogonal matrix.
Matrix<double> qr_orthonormalize(const Matrix<double>& a);

/// Cheap lower-bound proxy for the smallest singular value: the smallest
/// absolute pivot of a partially pivoted LU, divided by n. Only good enough
/// for threshold decisions; never reported as an exact sigma_min.
double min_singular_proxy(const Matrix<double>& a);

/// Exact rank over the rationals.
int rational_rank(const Matrix<Rational>& a);

struct SymmetricEigen {
    std::vector<double> values;   // descending
    Matrix<double> vectors;       // orthonormal columns, same order
};

/// Cyclic Jacobi eigendecomposition of a symmetric matrix.
SymmetricEigen jacobi_symmetric(const Matrix<double>& m);

} // namespace orthorep

#endif
