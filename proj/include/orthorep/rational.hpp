#ifndef ORTHOREP_RATIONAL_HPP
#define ORTHOREP_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <string>
#include <string_view>

#include "orthorep/error.hpp"

namespace orthorep {

/// Exact rational scalar: arbitrary-precision integer numerator/denominator,
/// kept in lowest terms with a positive denominator by the backend.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }
inline constexpr double to_double(double x) { return x; }

inline std::string to_string(const Rational& r) { return r.str(); }

/// Parses a scalar token into an exact rational. Accepts integers ("-7"),
/// fractions ("3/4", "-3/4"), decimals ("1.25"), and scientific notation
/// ("1e-8", "2.5E3"). Decimals are read exactly: "1.25" becomes 5/4, not the
/// nearest double.
inline Rational parse_rational(std::string_view token) {
    auto fail = [&] {
        throw Error(ErrorCode::ParseError,
                    "invalid rational token: '" + std::string(token) + "'");
    };
    if (token.empty()) fail();

    const auto slash = token.find('/');
    if (slash != std::string_view::npos) {
        // p/q form; both sides must be plain signed integers. The backend's
        // string constructor accepts "" as 0 and rejects a leading '+', so
        // validate and canonicalize here instead of relying on it.
        auto read_int = [&](std::string_view side) {
            std::string_view body = side;
            if (!body.empty() && (body[0] == '+' || body[0] == '-')) body.remove_prefix(1);
            if (body.empty()) fail();
            for (char ch : body)
                if (!std::isdigit(static_cast<unsigned char>(ch))) fail();
            BigInt value{std::string(body)};
            if (!side.empty() && side[0] == '-') value = -value;
            return value;
        };
        BigInt p = read_int(token.substr(0, slash));
        BigInt q = read_int(token.substr(slash + 1));
        if (q == 0) fail();
        if (q < 0) {
            p = -p;
            q = -q;
        }
        return Rational(p, q);
    }

    std::size_t pos = 0;
    bool negative = false;
    if (token[pos] == '+' || token[pos] == '-') {
        negative = token[pos] == '-';
        ++pos;
    }

    std::string digits;      // integer and fractional digits concatenated
    long frac_len = 0;
    bool saw_digit = false;
    for (; pos < token.size() && std::isdigit(static_cast<unsigned char>(token[pos])); ++pos) {
        digits += token[pos];
        saw_digit = true;
    }
    if (pos < token.size() && token[pos] == '.') {
        ++pos;
        for (; pos < token.size() && std::isdigit(static_cast<unsigned char>(token[pos])); ++pos) {
            digits += token[pos];
            ++frac_len;
            saw_digit = true;
        }
    }
    if (!saw_digit) fail();

    long exp10 = 0;
    if (pos < token.size() && (token[pos] == 'e' || token[pos] == 'E')) {
        ++pos;
        bool exp_neg = false;
        if (pos < token.size() && (token[pos] == '+' || token[pos] == '-')) {
            exp_neg = token[pos] == '-';
            ++pos;
        }
        if (pos == token.size()) fail();
        long e = 0;
        for (; pos < token.size() && std::isdigit(static_cast<unsigned char>(token[pos])); ++pos) {
            e = e * 10 + (token[pos] - '0');
            if (e > 1000000) fail();
        }
        exp10 = exp_neg ? -e : e;
    }
    if (pos != token.size()) fail();

    BigInt mantissa = digits.empty() ? BigInt(0) : BigInt(digits);
    if (negative) mantissa = -mantissa;

    const long net = exp10 - frac_len;
    BigInt pow10 = 1;
    for (long i = 0; i < (net < 0 ? -net : net); ++i) pow10 *= 10;
    return net >= 0 ? Rational(mantissa * pow10) : Rational(mantissa, pow10);
}

} // namespace orthorep

#endif
