#include "orthorep/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace orthorep {

Matrix<double> qr_orthonormalize(const Matrix<double>& a) {
    const int n = a.size();
    Matrix<double> r = a;
    Matrix<double> q = Matrix<double>::identity(n);
    const double floor = tol::pivot_rel * to_double(a.max_norm());

    // Householder reflections accumulated into Q.
    std::vector<double> v(n);
    for (int k = 0; k < n; ++k) {
        double norm = 0.0;
        for (int i = k; i < n; ++i) norm += r(i, k) * r(i, k);
        norm = std::sqrt(norm);
        if (norm <= floor)
            throw Error(ErrorCode::SingularMatrix, "qr_orthonormalize: rank-deficient column " + std::to_string(k));

        const double alpha = r(k, k) >= 0.0 ? -norm : norm;
        double vnorm2 = 0.0;
        for (int i = k; i < n; ++i) {
            v[i] = r(i, k) - (i == k ? alpha : 0.0);
            vnorm2 += v[i] * v[i];
        }
        if (vnorm2 > 0.0) {
            for (int j = k; j < n; ++j) {
                double dot = 0.0;
                for (int i = k; i < n; ++i) dot += v[i] * r(i, j);
                const double f = 2.0 * dot / vnorm2;
                for (int i = k; i < n; ++i) r(i, j) -= f * v[i];
            }
            for (int j = 0; j < n; ++j) {
                double dot = 0.0;
                for (int i = k; i < n; ++i) dot += v[i] * q(j, i);
                const double f = 2.0 * dot / vnorm2;
                for (int i = k; i < n; ++i) q(j, i) -= f * v[i];
            }
        }
    }

    // Normalize so diag(R) > 0; flipping column j of Q flips R's row j.
    for (int j = 0; j < n; ++j) {
        if (r(j, j) < 0.0)
            for (int i = 0; i < n; ++i) q(i, j) = -q(i, j);
    }
    return q;
}

double min_singular_proxy(const Matrix<double>& a) {
    const int n = a.size();
    if (n == 0) return 0.0;
    Matrix<double> m = a;
    double min_pivot = std::numeric_limits<double>::infinity();
    for (int k = 0; k < n; ++k) {
        int piv = k;
        double best = std::abs(m(k, k));
        for (int i = k + 1; i < n; ++i) {
            const double x = std::abs(m(i, k));
            if (x > best) { best = x; piv = i; }
        }
        if (best == 0.0) return 0.0;
        if (piv != k)
            for (int j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
        min_pivot = std::min(min_pivot, best);
        for (int i = k + 1; i < n; ++i) {
            const double f = m(i, k) / m(k, k);
            for (int j = k + 1; j < n; ++j) m(i, j) -= f * m(k, j);
        }
    }
    return min_pivot / n;
}

int rational_rank(const Matrix<Rational>& a) {
    const int n = a.size();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = a(i, j);

    int rank = 0;
    int row = 0;
    for (int col = 0; col < n && row < n; ++col) {
        int piv = -1;
        for (int i = row; i < n; ++i)
            if (m[i][col] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(m[row], m[piv]);
        for (int i = row + 1; i < n; ++i) {
            if (m[i][col] == 0) continue;
            const Rational f = m[i][col] / m[row][col];
            for (int j = col; j < n; ++j) m[i][j] -= f * m[row][j];
        }
        ++row;
        ++rank;
    }
    return rank;
}

SymmetricEigen jacobi_symmetric(const Matrix<double>& input) {
    const int n = input.size();
    Matrix<double> a = input;
    Matrix<double> v = Matrix<double>::identity(n);

    double fro = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) fro += a(i, j) * a(i, j);
    const double stop = 1e-14 * std::max(1.0, std::sqrt(fro));

    const int max_sweeps = 100;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
        if (std::sqrt(2.0 * off) <= stop) break;

        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (std::abs(apq) <= 1e-300) continue;

                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);

                const double app = a(p, p), aqq = a(q, q);
                a(p, p) = app - t * apq;
                a(q, q) = aqq + t * apq;
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (int r = 0; r < n; ++r) {
                    if (r != p && r != q) {
                        const double arp = a(r, p), arq = a(r, q);
                        a(r, p) = arp - s * (arq + tau * arp);
                        a(p, r) = a(r, p);
                        a(r, q) = arq + s * (arp - tau * arq);
                        a(q, r) = a(r, q);
                    }
                    const double vrp = v(r, p), vrq = v(r, q);
                    v(r, p) = vrp - s * (vrq + tau * vrp);
                    v(r, q) = vrq + s * (vrp - tau * vrq);
                }
            }
        }
    }

    SymmetricEigen out;
    out.values.resize(n);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return a(i, i) > a(j, j); });

    out.vectors = Matrix<double>(n);
    for (int c = 0; c < n; ++c) {
        out.values[c] = a(order[c], order[c]);
        for (int r = 0; r < n; ++r) out.vectors(r, c) = v(r, order[c]);
    }
    return out;
}

} // namespace orthorep
