#include <doctest.h>

#include <cmath>

#include "orthorep/generate.hpp"
#include "orthorep/linalg.hpp"

#include "support/test_util.hpp"

using orthorep::ErrorCode;
using orthorep::Matrix;
using orthorep::Rational;

TEST_CASE("sampler primitives are deterministic and in range") {
    orthorep::Sampler a(99), b(99);
    for (int i = 0; i < 200; ++i) {
        const double u = a.uniform01();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        CHECK(u == b.uniform01());
    }
    orthorep::Sampler c(7), d(7);
    for (int i = 0; i < 200; ++i) {
        const int v = c.uniform_int(-3, 5);
        CHECK(v >= -3);
        CHECK(v <= 5);
        CHECK(v == d.uniform_int(-3, 5));
    }
    orthorep::Sampler e(13), f(13);
    for (int i = 0; i < 200; ++i) {
        const double g = e.normal();
        CHECK(std::isfinite(g));
        CHECK(g == f.normal());
    }
}

TEST_CASE("haar rotations are orthogonal with determinant +1") {
    for (int n : {1, 2, 3, 8, 20}) {
        const auto q = orthorep::gen_haar_rotation(n, 2024 + n);
        CHECK(orthorep::max_abs_diff(q.transpose() * q, Matrix<double>::identity(n)) <= 1e-12);
        CHECK(std::abs(orthorep::determinant(q) - 1.0) <= 1e-12);
    }
    CHECK(orthorep::max_abs_diff(orthorep::gen_haar_rotation(1, 5),
                                 Matrix<double>::identity(1)) == 0.0);
}

TEST_CASE("haar generation is reproducible and seed-sensitive") {
    const auto a = orthorep::gen_haar_rotation(6, 31415);
    const auto b = orthorep::gen_haar_rotation(6, 31415);
    CHECK(orthorep::max_abs_diff(a, b) == 0.0);
    const auto c = orthorep::gen_haar_rotation(6, 31416);
    CHECK(orthorep::max_abs_diff(a, c) > 1e-3);
}

TEST_CASE("haar reflections are orthogonal with determinant -1") {
    for (int n : {1, 2, 5, 11}) {
        const auto q = orthorep::gen_haar_reflection(n, 777 + n);
        CHECK(orthorep::max_abs_diff(q.transpose() * q, Matrix<double>::identity(n)) <= 1e-12);
        CHECK(std::abs(orthorep::determinant(q) + 1.0) <= 1e-12);
    }
}

TEST_CASE("gen_singular hits the requested rank exactly") {
    CHECK(orthorep::gen_singular(4, 0, 1) == Matrix<Rational>(4));
    for (int rank : {1, 2, 3}) {
        const auto m = orthorep::gen_singular(4, rank, 100 + rank);
        CHECK(orthorep::rational_rank(m) == rank);
        CHECK(orthorep::determinant(m) == 0);
        // Entries are exact integers by construction.
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                CHECK(boost::multiprecision::denominator(m(i, j)) == 1);
    }
    const auto again = orthorep::gen_singular(4, 2, 102);
    CHECK(again == orthorep::gen_singular(4, 2, 102));
}

TEST_CASE("gen_singular rejects impossible ranks") {
    CHECK(test_util::thrown_code([] { orthorep::gen_singular(3, -1, 0); }) ==
          ErrorCode::BadRank);
    CHECK(test_util::thrown_code([] { orthorep::gen_singular(3, 3, 0); }) ==
          ErrorCode::BadRank);
    CHECK(test_util::thrown_code([] { orthorep::gen_singular(3, 4, 0); }) ==
          ErrorCode::BadRank);
}

TEST_CASE("gen_int_matrix stays within its bounds") {
    const auto m = orthorep::gen_int_matrix(6, 55, -2, 9);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            CHECK(m(i, j) >= -2);
            CHECK(m(i, j) <= 9);
            CHECK(boost::multiprecision::denominator(m(i, j)) == 1);
        }
    CHECK(m == orthorep::gen_int_matrix(6, 55, -2, 9));
}

TEST_CASE("gen_skew is exactly skew-symmetric") {
    for (double scale : {1.0, 0.01}) {
        const auto s = orthorep::gen_skew(5, 808, scale);
        for (int i = 0; i < 5; ++i) {
            CHECK(s(i, i) == 0.0);
            for (int j = 0; j < 5; ++j) CHECK(s(i, j) == -s(j, i));
        }
    }
    // The scale parameter scales entries linearly for a fixed seed.
    const auto unit = orthorep::gen_skew(4, 99, 1.0);
    const auto tenth = orthorep::gen_skew(4, 99, 0.1);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            CHECK(tenth(i, j) == doctest::Approx(0.1 * unit(i, j)).epsilon(1e-12));
}

TEST_CASE("generators reject non-positive dimensions") {
    CHECK(test_util::thrown_code([] { orthorep::gen_haar_rotation(0, 1); }) ==
          ErrorCode::NonSquare);
    CHECK(test_util::thrown_code([] { orthorep::gen_int_matrix(0, 1); }) ==
          ErrorCode::NonSquare);
    CHECK(test_util::thrown_code([] { orthorep::gen_skew(-2, 1); }) ==
          ErrorCode::NonSquare);
}
