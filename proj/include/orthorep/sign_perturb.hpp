#ifndef ORTHOREP_SIGN_PERTURB_HPP
#define ORTHOREP_SIGN_PERTURB_HPP

#include <cmath>
#include <cstdint>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "orthorep/linalg.hpp"
#include "orthorep/matrix.hpp"
#include "orthorep/tolerances.hpp"

namespace orthorep {

/// Result of a constructive sign search: the chosen signs together with every
/// accepted leading principal minor of E + A. On the rational backend each
/// minor is certified nonzero; the last one is det(E + A).
template <typename T>
struct SignSearchReport {
    SignVector signs;
    std::vector<T> minor_values;
    T det = T(1);
    int flips = 0;
};

enum class TieBreak { PreferPlus, PreferMinus };

namespace detail {

template <typename T>
int choose_sign(const T& with_plus, const T& with_minus, TieBreak tie) {
    if constexpr (std::is_same_v<T, double>) {
        // Greedy conditioning: keep the larger minor, ties broken by `tie`.
        const double p = std::abs(with_plus), m = std::abs(with_minus);
        if (tie == TieBreak::PreferPlus) return p >= m ? 1 : -1;
        return m >= p ? -1 : 1;
    } else {
        if (tie == TieBreak::PreferPlus) return with_plus != 0 ? 1 : -1;
        return with_minus != 0 ? -1 : 1;
    }
}

/// Hadamard bound prod_i |row_i|_2, a scale reference for determinant
/// magnitude thresholds on the float backend.
inline double hadamard_bound(const Matrix<double>& a) {
    double b = 1.0;
    for (int i = 0; i < a.size(); ++i) {
        double row = 0.0;
        for (int j = 0; j < a.size(); ++j) row += a(i, j) * a(i, j);
        b *= std::sqrt(row);
    }
    return b;
}

} // namespace detail

/*
 * Constructive form of the sign-perturbation theorem: for any square A and
 * any nonzero magnitudes c_i there are signs eps_i with
 * det(diag(eps_1 c_1, ..., eps_n c_n) + A) != 0.
 *
 * The induction behind the theorem, run greedily: with d_{k-1} the accepted
 * (k-1)-minor and q_k the k-minor of the matrix whose (k,k) perturbation is
 * still zero, expanding on the (k,k) entry gives
 *
 *     d_k = q_k + eps_k c_k d_{k-1},
 *
 * and since 2 c_k d_{k-1} != 0 at least one sign makes d_k != 0. Float
 * backend picks the sign of larger |d_k| (so |d_k| >= |c_k| |d_{k-1}|, which
 * keeps the accepted minors away from zero); exact backend prefers +1
 * whenever it gives a nonzero minor.
 */
template <typename T>
SignSearchReport<T> sign_assign(const Matrix<T>& a, const std::vector<T>& c,
                                TieBreak tie = TieBreak::PreferPlus) {
    const int n = a.size();
    if (static_cast<int>(c.size()) != n)
        throw Error(ErrorCode::DimensionMismatch,
                    "sign_assign: expected " + std::to_string(n) + " magnitudes, got " +
                    std::to_string(c.size()));
    for (const T& ci : c)
        if (ci == T(0))
            throw Error(ErrorCode::ZeroPerturbation, "perturbation magnitude is zero");

    SignSearchReport<T> report;
    std::vector<int> signs;
    signs.reserve(n);
    report.minor_values.reserve(n);

    Matrix<T> perturbed = a;
    T prev(1);
    for (int k = 0; k < n; ++k) {
        // Positions 0..k-1 of `perturbed` already carry their accepted signs;
        // position (k,k) does not, so this is q_k.
        const T q = leading_principal_minor(perturbed, k + 1);
        const T step = c[k] * prev;
        const int eps = detail::choose_sign<T>(q + step, q - step, tie);
        signs.push_back(eps);
        perturbed(k, k) += T(eps) * c[k];
        const T accepted = leading_principal_minor(perturbed, k + 1);
        report.minor_values.push_back(accepted);
        prev = accepted;
    }

    report.signs = SignVector(std::move(signs));
    report.flips = report.signs.flips();
    report.det = n == 0 ? T(1) : report.minor_values.back();
    return report;
}

/// Fact E: signs eps with I + EA invertible, E = diag(eps). Reduction:
/// E(I + EA) = E + A since E^2 = I, so invertibility of I + EA and of E + A
/// coincide, and sign_assign with unit magnitudes settles it. On floats the
/// accepted determinant must clear a Hadamard-scaled floor or the greedy is
/// retried with the opposite tie-break.
template <typename T>
SignVector fact_e(const Matrix<T>& a) {
    auto first = sign_assign(a, std::vector<T>(a.size(), T(1)), TieBreak::PreferPlus);
    if constexpr (std::is_same_v<T, double>) {
        const Matrix<double> ea =
            first.signs.template as_diagonal<double>() + a;
        const double floor = tol::fact_e * std::max(1.0, detail::hadamard_bound(ea));
        if (std::abs(first.det) <= floor) {
            auto second = sign_assign(a, std::vector<T>(a.size(), T(1)), TieBreak::PreferMinus);
            if (std::abs(second.det) > std::abs(first.det)) return second.signs;
        }
    }
    return first.signs;
}

/// E_k in the binary indexing k = k_n ... k_1: diagonal entry i is -1 iff
/// bit k_i is set. E_0 = I and E_{2^n - 1} = -I.
inline SignVector sign_vector_for_index(std::uint64_t k, int n) {
    std::vector<int> s(n);
    for (int i = 0; i < n; ++i) s[i] = (k >> i) & 1 ? -1 : 1;
    return SignVector(std::move(s));
}

inline void require_enumerable(int n, int max_n) {
    if (n > max_n)
        throw Error(ErrorCode::DimensionTooLarge,
                    "enumeration over 2^" + std::to_string(n) + " sign vectors exceeds bound " +
                    std::to_string(max_n));
}

/// Every sign vector eps (as E_k, ascending k) with det(diag(eps o c) + A)
/// nonzero. The c = 1 case is the brute-force oracle behind fact_e.
template <typename T>
std::vector<SignVector> enumerate_invertible(const Matrix<T>& a, const std::vector<T>& c,
                                             int max_n = 16) {
    const int n = a.size();
    require_enumerable(n, max_n);
    if (static_cast<int>(c.size()) != n)
        throw Error(ErrorCode::DimensionMismatch, "enumerate_invertible: bad magnitude count");
    for (const T& ci : c)
        if (ci == T(0))
            throw Error(ErrorCode::ZeroPerturbation, "perturbation magnitude is zero");

    std::vector<SignVector> survivors;
    for (std::uint64_t k = 0; k < (std::uint64_t(1) << n); ++k) {
        SignVector e = sign_vector_for_index(k, n);
        Matrix<T> m = a;
        for (int i = 0; i < n; ++i) m(i, i) += T(e[i]) * c[i];
        const T det = determinant(m);
        bool nonzero;
        if constexpr (std::is_same_v<T, double>) {
            nonzero = std::abs(det) > tol::fact_e * std::max(1.0, detail::hadamard_bound(m));
        } else {
            nonzero = det != 0;
        }
        if (nonzero) survivors.push_back(std::move(e));
    }
    return survivors;
}

/// All E_k with det(I + E_k A) != 0, ascending k. Never empty: if every
/// det(I + E_k A) vanished, the one-column determinant sum identity would
/// telescope to det(2^n I) = 0.
template <typename T>
std::vector<SignVector> kahan_enumerate(const Matrix<T>& a, int max_n = 16) {
    const int n = a.size();
    require_enumerable(n, max_n);
    std::vector<SignVector> survivors;
    for (std::uint64_t k = 0; k < (std::uint64_t(1) << n); ++k) {
        SignVector e = sign_vector_for_index(k, n);
        Matrix<T> m = Matrix<T>::identity(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(i, j) += T(e[i]) * a(i, j);
        const T det = determinant(m);
        bool nonzero;
        if constexpr (std::is_same_v<T, double>) {
            nonzero = std::abs(det) > tol::fact_e * std::max(1.0, detail::hadamard_bound(m));
        } else {
            nonzero = det != 0;
        }
        if (nonzero) survivors.push_back(std::move(e));
    }
    return survivors;
}

/// For A, B equal outside column j (1-based), returns the two sides of
/// det(A + B) = 2^{n-1} (det A + det B). Determinants are multilinear
/// alternating maps of their columns, which forces the identity.
template <typename T>
std::pair<T, T> kahan_identity_check(const Matrix<T>& a, const Matrix<T>& b, int j) {
    const int n = a.size();
    if (b.size() != n)
        throw Error(ErrorCode::DimensionMismatch, "kahan_identity_check: dimensions differ");
    if (j < 1 || j > n)
        throw Error(ErrorCode::IndexOutOfRange, "column index out of range");
    for (int col = 0; col < n; ++col) {
        if (col == j - 1) continue;
        for (int row = 0; row < n; ++row)
            if (!(a(row, col) == b(row, col)))
                throw Error(ErrorCode::ColumnsMismatch,
                            "matrices differ in column " + std::to_string(col + 1) +
                            ", expected differences only in column " + std::to_string(j));
    }

    T scale;
    if constexpr (std::is_same_v<T, double>) {
        scale = std::ldexp(1.0, n - 1);
    } else {
        scale = T(BigInt(1) << (n - 1));
    }
    return {determinant(a + b), scale * (determinant(a) + determinant(b))};
}

/// Sum E_0 + ... + E_{2^n - 1}; exactly zero because each diagonal position
/// carries +1 and -1 equally often across the enumeration.
inline Matrix<Rational> sign_matrix_sum_check(int n, int max_n = 16) {
    require_enumerable(n, max_n);
    Matrix<Rational> sum(n);
    for (std::uint64_t k = 0; k < (std::uint64_t(1) << n); ++k) {
        const SignVector e = sign_vector_for_index(k, n);
        for (int i = 0; i < n; ++i) sum(i, i) += e[i];
    }
    return sum;
}

/// The full chain E_0 ... E_{2^n - 1} in ascending binary order. Within every
/// aligned block of size 2^l, entry i and entry i + 2^{l-1} differ in exactly
/// position l; this pairing is what the telescoping determinant-sum argument
/// consumes level by level.
inline std::vector<SignVector> adjacent_flip_chain(int n, int max_n = 16) {
    require_enumerable(n, max_n);
    std::vector<SignVector> chain;
    chain.reserve(std::size_t(1) << n);
    for (std::uint64_t k = 0; k < (std::uint64_t(1) << n); ++k)
        chain.push_back(sign_vector_for_index(k, n));
    return chain;
}

} // namespace orthorep

#endif
