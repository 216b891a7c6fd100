#ifndef ORTHOREP_TESTS_ORACLES_HPP
#define ORTHOREP_TESTS_ORACLES_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "orthorep/matrix.hpp"
#include "orthorep/rational.hpp"

// Independent reference implementations used only by tests. They are written
// for obviousness, not speed, so library results can be checked against code
// with no shared machinery.

namespace oracles {

/// Determinant by recursive cofactor expansion along the first row.
template <typename T>
T cofactor_determinant(const orthorep::Matrix<T>& a) {
    const int n = a.size();
    if (n == 0) return T(1);
    if (n == 1) return a(0, 0);
    T det(0);
    for (int col = 0; col < n; ++col) {
        orthorep::Matrix<T> minor(n - 1);
        for (int i = 1; i < n; ++i) {
            int mj = 0;
            for (int j = 0; j < n; ++j) {
                if (j == col) continue;
                minor(i - 1, mj++) = a(i, j);
            }
        }
        const T term = a(0, col) * cofactor_determinant(minor);
        if (col % 2 == 0)
            det = det + term;
        else
            det = det - term;
    }
    return det;
}

/// Closed form for the 2x2 Cayley transform of [[0,-t],[t,0]]:
/// (1/(1+t^2)) [[1-t^2, 2t], [-2t, 1-t^2]].
inline orthorep::Matrix<orthorep::Rational> cayley_2x2_closed_form(const orthorep::Rational& t) {
    using orthorep::Rational;
    const Rational d = 1 + t * t;
    return orthorep::Matrix<Rational>::from_rows(
        {{(1 - t * t) / d, 2 * t / d}, {-2 * t / d, (1 - t * t) / d}});
}

/// Multivariate polynomial over the rationals with a fixed variable count;
/// monomials keyed by their exponent vectors.
struct Poly {
    int nvars = 0;
    std::map<std::vector<int>, orthorep::Rational> terms;

    static Poly constant(int nvars, const orthorep::Rational& c) {
        Poly p;
        p.nvars = nvars;
        if (c != 0) p.terms[std::vector<int>(nvars, 0)] = c;
        return p;
    }

    static Poly variable(int nvars, int index) {
        Poly p;
        p.nvars = nvars;
        std::vector<int> expo(nvars, 0);
        expo[index] = 1;
        p.terms[std::move(expo)] = 1;
        return p;
    }

    Poly operator+(const Poly& o) const {
        Poly r = *this;
        for (const auto& [expo, coeff] : o.terms) {
            auto& slot = r.terms[expo];
            slot += coeff;
            if (slot == 0) r.terms.erase(expo);
        }
        return r;
    }

    Poly operator*(const Poly& o) const {
        Poly r;
        r.nvars = nvars;
        for (const auto& [ea, ca] : terms)
            for (const auto& [eb, cb] : o.terms) {
                std::vector<int> expo(nvars);
                for (int i = 0; i < nvars; ++i) expo[i] = ea[i] + eb[i];
                auto& slot = r.terms[expo];
                slot += ca * cb;
                if (slot == 0) r.terms.erase(expo);
            }
        return r;
    }

    orthorep::Rational coefficient(const std::vector<int>& expo) const {
        const auto it = terms.find(expo);
        return it == terms.end() ? orthorep::Rational(0) : it->second;
    }
};

/// det(diag(x_1,...,x_n) + A) expanded symbolically by the permutation sum,
/// with the diagonal perturbations as formal variables.
inline Poly symbolic_perturbed_determinant(const orthorep::Matrix<orthorep::Rational>& a) {
    const int n = a.size();
    std::vector<std::vector<Poly>> entry(n, std::vector<Poly>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            entry[i][j] = Poly::constant(n, a(i, j));
            if (i == j) entry[i][j] = entry[i][j] + Poly::variable(n, i);
        }

    Poly det = Poly::constant(n, 0);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
        Poly term = Poly::constant(n, inversions % 2 == 0 ? 1 : -1);
        for (int i = 0; i < n; ++i) term = term * entry[i][perm[i]];
        det = det + term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

} // namespace oracles

#endif
