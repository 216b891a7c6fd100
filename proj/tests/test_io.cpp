#include <doctest.h>

#include <cmath>
#include <sstream>

#include "orthorep/generate.hpp"
#include "orthorep/io.hpp"

#include "support/test_util.hpp"

using orthorep::ErrorCode;
using orthorep::Matrix;
using orthorep::Rational;
namespace io = orthorep::io;

namespace {

io::MatrixInput parse(const std::string& text, bool force_exact = false) {
    std::istringstream in(text);
    return io::read_matrix(in, force_exact);
}

} // namespace

TEST_CASE("content digest matches the FNV-1a reference vectors") {
    CHECK(io::content_digest("") == "fnv1a:cbf29ce484222325");
    CHECK(io::content_digest("a") == "fnv1a:af63dc4c8601ec8c");
    CHECK(io::content_digest("foobar") == "fnv1a:85944171f73967e8");
    CHECK(io::content_digest("a") != io::content_digest("b"));
}

TEST_CASE("text format parses floats by default") {
    const auto input = parse("2\n1 2\n3 4\n");
    CHECK_FALSE(input.is_rational());
    CHECK(orthorep::max_abs_diff(
              input.values_float,
              Matrix<double>::from_rows({{1.0, 2.0}, {3.0, 4.0}})) == 0.0);
    CHECK(input.digest == io::content_digest("2\n1 2\n3 4\n"));
}

TEST_CASE("a fraction token switches the whole matrix to the rational backend") {
    const auto input = parse("2\n1/2 0\n0 3\n");
    REQUIRE(input.is_rational());
    CHECK(input.values_rational ==
          Matrix<Rational>::from_rows({{Rational(1, 2), Rational(0)},
                                       {Rational(0), Rational(3)}}));
    // The float view is still populated by conversion.
    CHECK(input.values_float(0, 0) == 0.5);
}

TEST_CASE("force_exact parses decimal tokens exactly") {
    const auto input = parse("1\n0.1\n", true);
    REQUIRE(input.is_rational());
    CHECK(input.values_rational(0, 0) == Rational(1, 10));

    const auto sci = parse("1\n2.5e3\n", true);
    CHECK(sci.values_rational(0, 0) == Rational(2500));
}

TEST_CASE("text parse errors carry ParseError") {
    for (const char* bad : {
             "",                   // no dimension
             "2\n1 2\n3\n",        // not enough entries
             "2\n1 2\n3 4 5\n",    // too many entries
             "x\n",                // dimension not a number
             "-1\n",               // negative dimension
             "2\n1 2\n3 oops\n",   // bad entry token
             "1\n1/0\n",           // zero denominator
             "9999999\n",          // beyond the parser's dimension limit
         }) {
        CAPTURE(bad);
        CHECK(test_util::thrown_code([&] { parse(bad); }) == ErrorCode::ParseError);
    }
}

TEST_CASE("float text round trip is bitwise exact") {
    orthorep::Sampler sampler(11);
    Matrix<double> m(4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m(i, j) = sampler.normal() * std::pow(10.0, i - 2);
    const auto text = io::matrix_to_text(m);
    const auto back = parse(text);
    CHECK_FALSE(back.is_rational());
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(back.values_float(i, j) == m(i, j));
}

TEST_CASE("rational text round trip is exact") {
    const auto m = Matrix<Rational>::from_rows(
        {{Rational(1, 3), Rational(-7, 2)}, {Rational(0), Rational(100000000000LL)}});
    const auto back = parse(io::matrix_to_text(m));
    REQUIRE(back.is_rational());
    CHECK(back.values_rational == m);
}

TEST_CASE("json round trips for both backends") {
    orthorep::Sampler sampler(12);
    Matrix<double> f(3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) f(i, j) = sampler.normal();
    const auto fj = io::matrix_to_json(f);
    CHECK(fj.at("backend") == "float");
    CHECK(fj.at("n") == 3);
    const auto fback = io::float_matrix_from_json(fj);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(fback(i, j) == f(i, j));

    const auto q = Matrix<Rational>::from_rows({{Rational(2, 7), Rational(-1)},
                                                {Rational(0), Rational(5, 3)}});
    const auto qj = io::matrix_to_json(q);
    CHECK(qj.at("backend") == "rational");
    CHECK(io::rational_matrix_from_json(qj) == q);

    // read_matrix sniffs JSON input by its first byte.
    const auto sniffed = parse(qj.dump());
    REQUIRE(sniffed.is_rational());
    CHECK(sniffed.values_rational == q);
    const auto fsniffed = parse(fj.dump());
    CHECK_FALSE(fsniffed.is_rational());
    CHECK(fsniffed.values_float(2, 2) == f(2, 2));
}

TEST_CASE("json parse errors carry ParseError") {
    for (const char* bad : {
             "{",                                          // malformed json
             "{\"rows\": [[1]]}",                          // missing n
             "{\"n\": 2, \"rows\": [[1, 2]]}",             // wrong row count
             "{\"n\": 1, \"rows\": [[1, 2]]}",             // wrong row width
             "{\"n\": 1, \"rows\": [[\"1/0\"]]}",          // zero denominator
             "{\"n\": 1, \"rows\": 3}",                    // rows not an array
         }) {
        CAPTURE(bad);
        CHECK(test_util::thrown_code([&] { parse(bad); }) == ErrorCode::ParseError);
    }
}

TEST_CASE("json backend tag forces rational parsing of plain numbers") {
    const auto input = parse(R"({"n": 1, "rows": [[3]], "backend": "rational"})");
    REQUIRE(input.is_rational());
    CHECK(input.values_rational(0, 0) == 3);
}

TEST_CASE("read_matrix_file reports missing files") {
    CHECK(test_util::thrown_code([] {
              io::read_matrix_file("/nonexistent/definitely_missing.txt");
          }) == ErrorCode::ParseError);
}

TEST_CASE("write_matrix_text emits the canonical layout") {
    std::ostringstream out;
    io::write_matrix_text(out, Matrix<Rational>::identity(2));
    CHECK(out.str() == "2\n1 0\n0 1\n");
}
