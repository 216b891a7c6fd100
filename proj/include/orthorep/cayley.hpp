#ifndef ORTHOREP_CAYLEY_HPP
#define ORTHOREP_CAYLEY_HPP

#include <string>
#include <type_traits>

#include "orthorep/linalg.hpp"
#include "orthorep/matrix.hpp"
#include "orthorep/tolerances.hpp"

namespace orthorep {

/// Matrix constrained to S^T = -S. Float construction tolerates skew defects
/// up to tol::skew and then canonicalizes to (S - S^T)/2 with an exactly zero
/// diagonal; rational construction demands exact skew-symmetry.
template <typename T>
class SkewSymmetric {
public:
    static SkewSymmetric from_matrix(const Matrix<T>& m) {
        const int n = m.size();
        if constexpr (std::is_same_v<T, double>) {
            double defect = 0.0;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    defect = std::max(defect, std::abs(m(i, j) + m(j, i)));
            if (defect > tol::skew)
                throw Error(ErrorCode::InvalidSkew,
                            "matrix is not skew-symmetric (defect " + std::to_string(defect) + ")");
            Matrix<T> s(n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    s(i, j) = i == j ? 0.0 : 0.5 * (m(i, j) - m(j, i));
            return SkewSymmetric(std::move(s));
        } else {
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (m(i, j) != -m(j, i))
                        throw Error(ErrorCode::InvalidSkew, "matrix is not exactly skew-symmetric");
            return SkewSymmetric(m);
        }
    }

    static SkewSymmetric zero(int n) { return SkewSymmetric(Matrix<T>(n)); }

    /// 2x2 generator [[0,-t],[t,0]].
    static SkewSymmetric plane(const T& t) {
        Matrix<T> s(2);
        s(0, 1) = -t;
        s(1, 0) = t;
        return SkewSymmetric(std::move(s));
    }

    const Matrix<T>& matrix() const { return inner_; }
    int size() const { return inner_.size(); }

private:
    explicit SkewSymmetric(Matrix<T> m) : inner_(std::move(m)) {}
    Matrix<T> inner_;
};

template <typename T>
struct CayleyObstruction {
    enum class Kind { None, MinusOneEigenvalue };
    Kind kind = Kind::None;
    /// min_singular_proxy(I + R) on the float backend, det(I + R) on the
    /// rational backend.
    T witness = T(0);

    bool obstructed() const { return kind == Kind::MinusOneEigenvalue; }
};

namespace detail {

template <typename T>
T orthogonality_defect(const Matrix<T>& r) {
    return max_abs_diff(r.transpose() * r, Matrix<T>::identity(r.size()));
}

template <typename T>
void require_orthogonal(const Matrix<T>& r, double tolerance) {
    if constexpr (std::is_same_v<T, double>) {
        const double defect = orthogonality_defect(r);
        if (defect > tolerance)
            throw Error(ErrorCode::NotOrthogonal,
                        "matrix is not orthogonal (|R^T R - I| = " + std::to_string(defect) + ")");
    } else {
        if (!(r.transpose() * r == Matrix<T>::identity(r.size())))
            throw Error(ErrorCode::NotOrthogonal, "matrix is not exactly orthogonal");
    }
}

} // namespace detail

/// R = (I - S)(I + S)^-1. The factors commute, so this is computed as the
/// single solve (I + S) R = (I - S). I + S is nonsingular for every real
/// skew-symmetric S (its eigenvalues are purely imaginary), so the transform
/// is total.
template <typename T>
Matrix<T> cayley_transform(const SkewSymmetric<T>& s) {
    const Matrix<T> id = Matrix<T>::identity(s.size());
    return solve(id + s.matrix(), id - s.matrix());
}

/// Detects the -1 eigenvalue: the plain Cayley map reaches exactly the
/// rotations for which I + R is invertible.
template <typename T>
CayleyObstruction<T> obstruction_check(const Matrix<T>& r, double tolerance = tol::orth) {
    detail::require_orthogonal(r, tolerance);
    const Matrix<T> ir = Matrix<T>::identity(r.size()) + r;
    CayleyObstruction<T> out;
    if constexpr (std::is_same_v<T, double>) {
        out.witness = min_singular_proxy(ir);
        if (out.witness < tol::cayley) out.kind = CayleyObstruction<T>::Kind::MinusOneEigenvalue;
    } else {
        out.witness = determinant(ir);
        if (out.witness == 0) out.kind = CayleyObstruction<T>::Kind::MinusOneEigenvalue;
    }
    return out;
}

/// S = (I - R)(I + R)^-1, the unique skew-symmetric preimage of a rotation
/// without eigenvalue -1. Validates orthogonality first and the obstruction
/// second so error kinds are deterministic.
template <typename T>
SkewSymmetric<T> inverse_cayley(const Matrix<T>& r, double tolerance = tol::orth) {
    const auto obstruction = obstruction_check(r, tolerance);
    if (obstruction.obstructed())
        throw Error(ErrorCode::MinusOneEigenvalue,
                    "matrix admits -1 as an eigenvalue; plain Cayley inverse undefined");
    const Matrix<T> id = Matrix<T>::identity(r.size());
    return SkewSymmetric<T>::from_matrix(solve(id + r, id - r));
}

} // namespace orthorep

#endif
