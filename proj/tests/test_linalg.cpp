#include <doctest.h>

#include <cmath>

#include "orthorep/generate.hpp"
#include "orthorep/linalg.hpp"

#include "support/oracles.hpp"
#include "support/test_util.hpp"

using orthorep::ErrorCode;
using orthorep::Matrix;
using orthorep::Rational;

TEST_CASE("determinant on fixed inputs") {
    CHECK(orthorep::determinant(Matrix<double>::identity(3)) == 1.0);
    CHECK(orthorep::determinant(Matrix<Rational>::identity(3)) == 1);

    CHECK(orthorep::determinant(Matrix<double>::diagonal({2.0, 3.0, 4.0})) == 24.0);
    CHECK(orthorep::determinant(
              Matrix<Rational>::diagonal({Rational(2), Rational(3), Rational(4)})) == 24);

    const auto a = Matrix<Rational>::from_rows({{Rational(1), Rational(2)},
                                                {Rational(3), Rational(4)}});
    CHECK(orthorep::determinant(a) == -2);
    CHECK(orthorep::determinant(Matrix<double>::from_rows({{1.0, 2.0}, {3.0, 4.0}})) ==
          doctest::Approx(-2.0));
}

TEST_CASE("rational determinant equals cofactor expansion for n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            const auto a = orthorep::gen_int_matrix(n, 1000 * n + seed);
            CAPTURE(n);
            CAPTURE(seed);
            CHECK(orthorep::determinant(a) == oracles::cofactor_determinant(a));
        }
    }
}

TEST_CASE("float determinant tracks the exact value on integer matrices") {
    for (int n = 2; n <= 5; ++n) {
        const auto a = orthorep::gen_int_matrix(n, 77 + n);
        const double exact = orthorep::to_double(oracles::cofactor_determinant(a));
        CHECK(orthorep::determinant(orthorep::to_float(a)) == doctest::Approx(exact));
    }
}

TEST_CASE("determinant of a transpose is unchanged, exactly") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto a = orthorep::gen_int_matrix(5, 500 + seed);
        CHECK(orthorep::determinant(a.transpose()) == orthorep::determinant(a));
    }
}

TEST_CASE("singular matrices yield exactly zero rational determinant") {
    auto a = orthorep::gen_int_matrix(4, 9);
    for (int j = 0; j < 4; ++j) a(3, j) = a(0, j);   // duplicate a row
    CHECK(orthorep::determinant(a) == 0);
}

TEST_CASE("determinants are multilinear in a single differing column") {
    // det(A + B) = 2^(n-1) (det A + det B) when A and B agree outside one
    // column; A + B doubles the shared columns, and each doubled column pulls
    // out one factor of 2.
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const int n = 3 + static_cast<int>(seed % 3);
        auto a = orthorep::gen_int_matrix(n, 300 + seed);
        auto b = a;
        const auto fresh = orthorep::gen_int_matrix(n, 400 + seed);
        for (int i = 0; i < n; ++i) b(i, 1) = fresh(i, 1);
        const Rational lhs = orthorep::determinant(a + b);
        const Rational rhs =
            Rational(orthorep::BigInt(1) << (n - 1)) *
            (orthorep::determinant(a) + orthorep::determinant(b));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("solve on fixed inputs") {
    const auto b = Matrix<Rational>::from_rows({{Rational(1), Rational(2)},
                                                {Rational(3), Rational(4)}});
    CHECK(orthorep::solve(Matrix<Rational>::identity(2), b) == b);

    const auto d = Matrix<Rational>::diagonal({Rational(2), Rational(4)});
    const auto inv = orthorep::solve(d, Matrix<Rational>::identity(2));
    CHECK(inv == Matrix<Rational>::diagonal({Rational(1, 2), Rational(1, 4)}));

    // Permutation system: swapping rows of the identity swaps rows of B.
    const auto p = Matrix<Rational>::from_rows({{Rational(0), Rational(1)},
                                                {Rational(1), Rational(0)}});
    const auto x = orthorep::solve(p, b);
    CHECK(x == Matrix<Rational>::from_rows({{Rational(3), Rational(4)},
                                            {Rational(1), Rational(2)}}));
}

TEST_CASE("solve reports singular systems") {
    CHECK(test_util::thrown_code([] {
              orthorep::solve(Matrix<Rational>(2), Matrix<Rational>::identity(2));
          }) == ErrorCode::SingularMatrix);
    CHECK(test_util::thrown_code([] {
              orthorep::solve(Matrix<double>(2), Matrix<double>::identity(2));
          }) == ErrorCode::SingularMatrix);

    // Rank-1 float matrix: the second pivot falls below the relative floor.
    const auto r1 = Matrix<double>::from_rows({{1.0, 2.0}, {2.0, 4.0}});
    CHECK(test_util::thrown_code([&] {
              orthorep::solve(r1, Matrix<double>::identity(2));
          }) == ErrorCode::SingularMatrix);
}

TEST_CASE("solve residual stays small on well-conditioned float systems") {
    for (int n : {5, 20, 50}) {
        // I + 0.5 Q keeps all eigenvalues inside a radius-1/2 disk around 1,
        // so conditioning is mild by construction.
        const auto q = orthorep::gen_haar_rotation(n, 7 * n);
        const auto a = Matrix<double>::identity(n) + q.scaled(0.5);
        const auto x = orthorep::solve(a, Matrix<double>::identity(n));
        CHECK(orthorep::max_abs_diff(a * x, Matrix<double>::identity(n)) <= 1e-8);
    }
}

TEST_CASE("exact solve round trips against multiplication") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        auto a = orthorep::gen_int_matrix(4, 600 + seed);
        a(0, 0) += 20;   // keep it invertible
        a(1, 1) += 20;
        a(2, 2) += 20;
        a(3, 3) += 20;
        if (orthorep::determinant(a) == 0) continue;
        const auto b = orthorep::gen_int_matrix(4, 700 + seed);
        const auto x = orthorep::solve(a, b);
        CHECK(a * x == b);
    }
}

TEST_CASE("leading principal minors") {
    const auto a = Matrix<Rational>::from_rows({{Rational(1), Rational(2)},
                                                {Rational(3), Rational(4)}});
    CHECK(orthorep::leading_principal_minor(Matrix<Rational>::identity(4), 2) == 1);
    CHECK(orthorep::leading_principal_minor(a, 1) == 1);
    CHECK(orthorep::leading_principal_minor(a, 2) == -2);
    CHECK(test_util::thrown_code([&] {
              orthorep::leading_principal_minor(a, 0);
          }) == ErrorCode::IndexOutOfRange);
    CHECK(test_util::thrown_code([&] {
              orthorep::leading_principal_minor(a, 3);
          }) == ErrorCode::IndexOutOfRange);
}

TEST_CASE("qr_orthonormalize on fixed inputs") {
    CHECK(orthorep::max_abs_diff(orthorep::qr_orthonormalize(Matrix<double>::identity(3)),
                                 Matrix<double>::identity(3)) <= 1e-15);

    // Positive-diagonal normalization maps any positive diagonal matrix to I.
    CHECK(orthorep::max_abs_diff(
              orthorep::qr_orthonormalize(Matrix<double>::diagonal({3.0, 5.0})),
              Matrix<double>::identity(2)) <= 1e-15);

    const auto swapped =
        orthorep::qr_orthonormalize(Matrix<double>::from_rows({{0.0, 2.0}, {2.0, 0.0}}));
    CHECK(orthorep::max_abs_diff(
              swapped, Matrix<double>::from_rows({{0.0, 1.0}, {1.0, 0.0}})) <= 1e-15);
}

TEST_CASE("qr_orthonormalize produces orthonormal columns up to n = 50") {
    for (int n : {2, 10, 50}) {
        orthorep::Sampler sampler(40 + n);
        Matrix<double> g(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) g(i, j) = sampler.normal();
        const auto q = orthorep::qr_orthonormalize(g);
        CHECK(orthorep::max_abs_diff(q.transpose() * q, Matrix<double>::identity(n)) <= 1e-12);
    }
}

TEST_CASE("qr_orthonormalize rejects singular input") {
    CHECK(test_util::thrown_code([] {
              orthorep::qr_orthonormalize(Matrix<double>(3));
          }) == ErrorCode::SingularMatrix);
}

TEST_CASE("min_singular_proxy threshold behavior") {
    CHECK(orthorep::min_singular_proxy(Matrix<double>::identity(4)) >= 0.25);
    CHECK(orthorep::min_singular_proxy(Matrix<double>(3)) == 0.0);
    CHECK(orthorep::min_singular_proxy(Matrix<double>::diagonal({1.0, 1e-14})) <= 1e-14);
}

TEST_CASE("rational_rank is exact") {
    CHECK(orthorep::rational_rank(Matrix<Rational>::identity(4)) == 4);
    CHECK(orthorep::rational_rank(Matrix<Rational>(3)) == 0);

    auto a = orthorep::gen_int_matrix(4, 31);
    for (int j = 0; j < 4; ++j) a(2, j) = a(0, j) + a(1, j);
    CHECK(orthorep::rational_rank(a) <= 3);
}

TEST_CASE("jacobi_symmetric recovers eigenstructure") {
    const auto d = Matrix<double>::diagonal({-1.0, 3.0, 2.0});
    const auto eig = orthorep::jacobi_symmetric(d);
    CHECK(eig.values[0] == doctest::Approx(3.0));
    CHECK(eig.values[1] == doctest::Approx(2.0));
    CHECK(eig.values[2] == doctest::Approx(-1.0));

    for (int n : {2, 6, 12}) {
        orthorep::Sampler sampler(90 + n);
        Matrix<double> m(n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                const double v = sampler.normal();
                m(i, j) = v;
                m(j, i) = v;
            }
        const auto e = orthorep::jacobi_symmetric(m);
        CHECK(orthorep::max_abs_diff(e.vectors.transpose() * e.vectors,
                                     Matrix<double>::identity(n)) <= 1e-12);
        const auto lambda = Matrix<double>::diagonal(e.values);
        CHECK(orthorep::max_abs_diff(e.vectors * lambda * e.vectors.transpose(), m) <= 1e-11);
        for (std::size_t k = 1; k < e.values.size(); ++k)
            CHECK(e.values[k - 1] >= e.values[k]);
    }
}
