#ifndef ORTHOREP_NORMAL_FORM_HPP
#define ORTHOREP_NORMAL_FORM_HPP

#include <string>
#include <variant>
#include <vector>

#include "orthorep/cayley.hpp"
#include "orthorep/matrix.hpp"
#include "orthorep/sign_perturb.hpp"
#include "orthorep/tolerances.hpp"

namespace orthorep {

/// One diagonal block of the orthogonal normal form: 1, -1, or a plane
/// rotation [[cos t, -sin t], [sin t, cos t]] with 0 < t <= pi. Angle pi
/// only appears when -1 eigenvalue pairs were grouped into plane rotations.
struct CanonicalBlock {
    enum class Kind { PlusOne, MinusOne, Rotation };
    Kind kind = Kind::PlusOne;
    double angle = 0.0;   // radians; meaningful iff kind == Rotation

    int dim() const { return kind == Kind::Rotation ? 2 : 1; }

    static CanonicalBlock plus_one() { return {Kind::PlusOne, 0.0}; }
    static CanonicalBlock minus_one() { return {Kind::MinusOne, 0.0}; }
    static CanonicalBlock rotation(double angle) { return {Kind::Rotation, angle}; }
};

/// R = P D P^T with orthogonal P and block-diagonal D. Blocks are kept in
/// canonical order: all +1 blocks, then rotations by ascending angle, then
/// -1 blocks; P's columns are permuted to match.
class NormalForm {
public:
    NormalForm(Matrix<double> p, std::vector<CanonicalBlock> blocks, bool paired)
        : p_(std::move(p)), blocks_(std::move(blocks)), paired_minus_ones_(paired) {}

    const Matrix<double>& p() const { return p_; }
    const std::vector<CanonicalBlock>& blocks() const { return blocks_; }
    bool paired_minus_ones() const { return paired_minus_ones_; }

    int count(CanonicalBlock::Kind kind) const {
        int c = 0;
        for (const auto& b : blocks_) c += b.kind == kind;
        return c;
    }

    Matrix<double> block_diagonal() const;
    Matrix<double> reconstruct() const;   // P D P^T

private:
    Matrix<double> p_;
    std::vector<CanonicalBlock> blocks_;
    bool paired_minus_ones_;
};

/// Eigenstructure of R via Jacobi iterations on the symmetric (R + R^T)/2,
/// each eigenvector refined into a 1-dimensional (+-1) or 2-dimensional
/// (rotation plane) invariant subspace of R. When pair_minus_ones is set,
/// -1 eigenvectors are grouped pairwise into angle-pi rotation blocks; a
/// leftover single -1 (the det = -1 case) stays a MinusOne block.
NormalForm normal_form(const Matrix<double>& r, bool pair_minus_ones,
                       double tolerance = tol::orth);

/// R^{1/2} = P D^{1/2} P^T: every rotation angle halved, so the root is a
/// rotation without eigenvalue -1 (halved angles stay within (0, pi/2] and
/// pi-paired -1 blocks become quarter turns).
Matrix<double> rotation_sqrt(const Matrix<double>& r, double tolerance = tol::orth);

template <typename T>
struct PlainCayley {
    SkewSymmetric<T> s;
};

template <typename T>
struct SquaredCayleyRep {
    SkewSymmetric<T> s;
};

template <typename T>
struct TwoFactorRep {
    SkewSymmetric<T> s1;
    SkewSymmetric<T> s2;
};

template <typename T>
struct SignedCayleyRep {
    SignVector e;
    SkewSymmetric<T> s;
};

/// Tagged result of a representation query over the Cayley hierarchy.
template <typename T>
using OrthRepresentation =
    std::variant<PlainCayley<T>, SquaredCayleyRep<T>, TwoFactorRep<T>, SignedCayleyRep<T>>;

/// Applies the variant's defining formula.
template <typename T>
Matrix<T> evaluate(const OrthRepresentation<T>& rep) {
    return std::visit(
        [](const auto& r) -> Matrix<T> {
            using V = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<V, PlainCayley<T>>) {
                return cayley_transform(r.s);
            } else if constexpr (std::is_same_v<V, SquaredCayleyRep<T>>) {
                const Matrix<T> c = cayley_transform(r.s);
                return c * c;
            } else if constexpr (std::is_same_v<V, TwoFactorRep<T>>) {
                return cayley_transform(r.s1) * cayley_transform(r.s2);
            } else {
                return r.e.template as_diagonal<T>() * cayley_transform(r.s);
            }
        },
        rep);
}

template <typename T>
const char* variant_name(const OrthRepresentation<T>& rep) {
    switch (rep.index()) {
        case 0: return "plain-cayley";
        case 1: return "squared-cayley";
        case 2: return "two-factor";
        default: return "signed-cayley";
    }
}

/// S with R = (Cayley(S))^2, for any rotation R: take the skew preimage of
/// R^{1/2}, which never carries the -1 obstruction.
OrthRepresentation<double> squared_cayley_rep(const Matrix<double>& r,
                                              double tolerance = tol::orth);

/// (S1, S2) with R = Cayley(S1) Cayley(S2). Equal factors taken from the
/// squared representation are a valid witness.
OrthRepresentation<double> weyl_two_factor(const Matrix<double>& r,
                                           double tolerance = tol::orth);

/// (E, S) with R = E Cayley(S) for any orthogonal R, proper or improper:
/// fact_e picks E so that I + ER is invertible, E R then has a plain Cayley
/// preimage, and E^2 = I turns E (ER) back into R.
template <typename T>
OrthRepresentation<T> signed_cayley_rep(const Matrix<T>& r, double tolerance = tol::orth) {
    detail::require_orthogonal(r, tolerance);
    const SignVector e = fact_e(r);
    const Matrix<T> er = e.as_diagonal<T>() * r;
    return SignedCayleyRep<T>{e, inverse_cayley(er, tolerance)};
}

/// Dispatcher over the hierarchy: plain Cayley when R is a rotation without
/// eigenvalue -1, squared Cayley for obstructed rotations, signed Cayley for
/// improper matrices.
OrthRepresentation<double> represent(const Matrix<double>& r, double tolerance = tol::orth);

} // namespace orthorep

#endif
