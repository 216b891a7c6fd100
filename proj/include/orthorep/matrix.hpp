#ifndef ORTHOREP_MATRIX_HPP
#define ORTHOREP_MATRIX_HPP

#include <cmath>
#include <cstdlib>
#include <initializer_list>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "orthorep/error.hpp"
#include "orthorep/rational.hpp"

namespace orthorep {

template <typename T>
inline T abs_value(const T& x) {
    if constexpr (std::is_same_v<T, double>) {
        return std::abs(x);
    } else {
        return x < 0 ? T(-x) : x;
    }
}

/// Dense square matrix over one scalar backend (double or Rational).
/// Immutable by convention once built: operations return new values.
template <typename T>
class Matrix {
public:
    Matrix() = default;

    explicit Matrix(int n) : n_(check_dim(n)), e_(static_cast<std::size_t>(n) * n, T(0)) {}

    static Matrix identity(int n) {
        Matrix m(n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
        const int n = static_cast<int>(rows.size());
        Matrix m(n);
        for (int i = 0; i < n; ++i) {
            if (static_cast<int>(rows[i].size()) != n)
                throw Error(ErrorCode::NonSquare, "row " + std::to_string(i) +
                            " has " + std::to_string(rows[i].size()) +
                            " entries, expected " + std::to_string(n));
            for (int j = 0; j < n; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    static Matrix from_rows(std::initializer_list<std::initializer_list<T>> rows) {
        std::vector<std::vector<T>> v;
        for (const auto& r : rows) v.emplace_back(r);
        return from_rows(v);
    }

    static Matrix diagonal(const std::vector<T>& d) {
        Matrix m(static_cast<int>(d.size()));
        for (int i = 0; i < m.size(); ++i) m(i, i) = d[i];
        return m;
    }

    int size() const { return n_; }

    T& operator()(int i, int j) { return e_[static_cast<std::size_t>(i) * n_ + j]; }
    const T& operator()(int i, int j) const { return e_[static_cast<std::size_t>(i) * n_ + j]; }

    const T& at(int i, int j) const {
        if (i < 0 || i >= n_ || j < 0 || j >= n_)
            throw Error(ErrorCode::IndexOutOfRange, "matrix index out of range");
        return (*this)(i, j);
    }

    Matrix transpose() const {
        Matrix r(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    Matrix operator+(const Matrix& o) const {
        require_same_size(o);
        Matrix r(n_);
        for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] + o.e_[k];
        return r;
    }

    Matrix operator-(const Matrix& o) const {
        require_same_size(o);
        Matrix r(n_);
        for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] - o.e_[k];
        return r;
    }

    Matrix operator-() const {
        Matrix r(n_);
        for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = -e_[k];
        return r;
    }

    Matrix operator*(const Matrix& o) const {
        require_same_size(o);
        Matrix r(n_);
        for (int i = 0; i < n_; ++i)
            for (int k = 0; k < n_; ++k) {
                const T& a = (*this)(i, k);
                if constexpr (!std::is_same_v<T, double>) {
                    if (a == 0) continue;
                }
                for (int j = 0; j < n_; ++j) r(i, j) += a * o(k, j);
            }
        return r;
    }

    Matrix scaled(const T& s) const {
        Matrix r(n_);
        for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] * s;
        return r;
    }

    /// Max-norm: largest absolute entry.
    T max_norm() const {
        T m(0);
        for (const T& x : e_) {
            T a = abs_value(x);
            if (a > m) m = a;
        }
        return m;
    }

    std::vector<T> column(int j) const {
        std::vector<T> c(n_);
        for (int i = 0; i < n_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    Matrix leading_submatrix(int k) const {
        Matrix r(k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) r(i, j) = (*this)(i, j);
        return r;
    }

    // Exact equality is meaningful only on the rational backend; float
    // comparisons must go through approx_equal with an explicit tolerance.
    bool operator==(const Matrix& o) const
        requires(!std::is_same_v<T, double>)
    {
        return n_ == o.n_ && e_ == o.e_;
    }

private:
    static int check_dim(int n) {
        if (n < 0) throw Error(ErrorCode::NonSquare, "negative dimension");
        return n;
    }

    void require_same_size(const Matrix& o) const {
        if (n_ != o.n_)
            throw Error(ErrorCode::DimensionMismatch, "matrix dimensions differ");
    }

    int n_ = 0;
    std::vector<T> e_;
};

template <typename T>
inline T max_abs_diff(const Matrix<T>& a, const Matrix<T>& b) {
    return (a - b).max_norm();
}

inline bool approx_equal(const Matrix<double>& a, const Matrix<double>& b, double tolerance) {
    return a.size() == b.size() && max_abs_diff(a, b) <= tolerance;
}

inline Matrix<double> to_float(const Matrix<Rational>& a) {
    Matrix<double> r(a.size());
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < a.size(); ++j) r(i, j) = to_double(a(i, j));
    return r;
}

/// Vector of +-1 entries; as a diagonal matrix it squares to the identity.
class SignVector {
public:
    SignVector() = default;

    explicit SignVector(std::vector<int> signs) : s_(std::move(signs)) {
        for (int v : s_)
            if (v != 1 && v != -1)
                throw Error(ErrorCode::ParseError, "sign vector entries must be +1 or -1");
    }

    static SignVector all_plus(int n) { return SignVector(std::vector<int>(n, 1)); }

    int size() const { return static_cast<int>(s_.size()); }
    int operator[](int i) const { return s_[i]; }
    const std::vector<int>& values() const { return s_; }

    /// Number of -1 entries.
    int flips() const {
        int c = 0;
        for (int v : s_) c += v < 0;
        return c;
    }

    template <typename T>
    Matrix<T> as_diagonal() const {
        Matrix<T> m(size());
        for (int i = 0; i < size(); ++i) m(i, i) = T(s_[i]);
        return m;
    }

    bool operator==(const SignVector& o) const { return s_ == o.s_; }

    std::string str() const {
        std::string out = "(";
        for (int i = 0; i < size(); ++i) {
            out += s_[i] > 0 ? "+1" : "-1";
            if (i + 1 < size()) out += ",";
        }
        return out + ")";
    }

private:
    std::vector<int> s_;
};

/// Signed diagonal perturbation E = diag(eps_1 c_1, ..., eps_n c_n) with
/// every magnitude c_i nonzero.
template <typename T>
struct DiagonalPerturbation {
    std::vector<T> magnitudes;
    SignVector signs;

    DiagonalPerturbation(std::vector<T> c, SignVector eps)
        : magnitudes(std::move(c)), signs(std::move(eps)) {
        if (static_cast<int>(magnitudes.size()) != signs.size())
            throw Error(ErrorCode::DimensionMismatch,
                        "perturbation magnitudes and signs differ in length");
        for (const T& m : magnitudes)
            if (m == T(0))
                throw Error(ErrorCode::ZeroPerturbation, "perturbation magnitude is zero");
    }

    Matrix<T> as_matrix() const {
        Matrix<T> m(signs.size());
        for (int i = 0; i < signs.size(); ++i) m(i, i) = T(signs[i]) * magnitudes[i];
        return m;
    }
};

} // namespace orthorep

#endif
