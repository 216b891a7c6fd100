#ifndef ORTHOREP_GENERATE_HPP
#define ORTHOREP_GENERATE_HPP

#include <cstdint>
#include <random>

#include "orthorep/matrix.hpp"
#include "orthorep/rational.hpp"

namespace orthorep {

/// Deterministic cross-platform sampling helpers on top of mt19937_64. The
/// standard distributions are implementation-defined, so uniform and normal
/// variates are derived from raw engine output directly.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1) with 53-bit resolution.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Standard normal via the Box-Muller transform.
    double normal();

    /// Uniform integer in [lo, hi], inclusive.
    int uniform_int(int lo, int hi);

private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// Haar-distributed rotation: QR of an i.i.d. Gaussian matrix with the
/// positive-diagonal sign convention, then the last column is flipped when
/// det(Q) = -1. Deterministic for a fixed (n, seed).
Matrix<double> gen_haar_rotation(int n, std::uint64_t seed);

/// Haar-distributed improper orthogonal matrix: a Haar rotation with one
/// column flipped, so det = -1.
Matrix<double> gen_haar_reflection(int n, std::uint64_t seed);

/// Integer matrix of exact rank `rank`, built as a product of random integer
/// n x rank and rank x n factors and re-drawn until the rational-backend rank
/// check confirms the target. rank = 0 yields the zero matrix.
Matrix<Rational> gen_singular(int n, int rank, std::uint64_t seed);

/// Random integer matrix with entries uniform in [lo, hi].
Matrix<Rational> gen_int_matrix(int n, std::uint64_t seed, int lo = -5, int hi = 5);

/// Random skew-symmetric float matrix with independent Gaussian entries
/// above the diagonal, scaled by `scale`.
Matrix<double> gen_skew(int n, std::uint64_t seed, double scale = 1.0);

} // namespace orthorep

#endif
