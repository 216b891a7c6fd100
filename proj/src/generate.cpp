#include "orthorep/generate.hpp"

#include <cmath>
#include <numbers>

#include "orthorep/error.hpp"
#include "orthorep/linalg.hpp"

namespace orthorep {

double Sampler::normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = uniform01();
    while (u1 <= 0.0) u1 = uniform01();
    const double u2 = uniform01();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
}

int Sampler::uniform_int(int lo, int hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(engine_() % span);
}

Matrix<double> gen_haar_rotation(int n, std::uint64_t seed) {
    if (n < 1) throw Error(ErrorCode::NonSquare, "dimension must be positive");
    Sampler sampler(seed);
    Matrix<double> g(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g(i, j) = sampler.normal();
    if (n == 1) return Matrix<double>::identity(1);

    Matrix<double> q = qr_orthonormalize(g);
    if (determinant(q) < 0.0)
        for (int i = 0; i < n; ++i) q(i, n - 1) = -q(i, n - 1);
    return q;
}

Matrix<double> gen_haar_reflection(int n, std::uint64_t seed) {
    Matrix<double> q = gen_haar_rotation(n, seed);
    for (int i = 0; i < n; ++i) q(i, 0) = -q(i, 0);
    return q;
}

Matrix<Rational> gen_singular(int n, int rank, std::uint64_t seed) {
    if (n < 1) throw Error(ErrorCode::NonSquare, "dimension must be positive");
    if (rank < 0 || rank >= n)
        throw Error(ErrorCode::BadRank,
                    "rank must satisfy 0 <= rank < n, got rank " + std::to_string(rank) +
                        " for n = " + std::to_string(n));
    Matrix<Rational> result(n);
    if (rank == 0) return result;

    Sampler sampler(seed);
    while (true) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) result(i, j) = Rational(0);
        for (int k = 0; k < rank; ++k) {
            std::vector<int> left(n), right(n);
            for (int i = 0; i < n; ++i) left[i] = sampler.uniform_int(-3, 3);
            for (int j = 0; j < n; ++j) right[j] = sampler.uniform_int(-3, 3);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) result(i, j) += Rational(left[i] * right[j]);
        }
        if (rational_rank(result) == rank) return result;
    }
}

Matrix<Rational> gen_int_matrix(int n, std::uint64_t seed, int lo, int hi) {
    if (n < 1) throw Error(ErrorCode::NonSquare, "dimension must be positive");
    Sampler sampler(seed);
    Matrix<Rational> m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = Rational(sampler.uniform_int(lo, hi));
    return m;
}

Matrix<double> gen_skew(int n, std::uint64_t seed, double scale) {
    if (n < 1) throw Error(ErrorCode::NonSquare, "dimension must be positive");
    Sampler sampler(seed);
    Matrix<double> s(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double v = scale * sampler.normal();
            s(i, j) = v;
            s(j, i) = -v;
        }
    return s;
}

} // namespace orthorep
