#ifndef ORTHOREP_IO_HPP
#define ORTHOREP_IO_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

#include <json.hpp>

#include "orthorep/matrix.hpp"
#include "orthorep/rational.hpp"

namespace orthorep::io {

enum class Backend { Float, Rational };

inline const char* backend_name(Backend b) {
    return b == Backend::Float ? "float" : "rational";
}

/// A parsed input matrix. The rational form is kept whenever the source was
/// exact (any `p/q` token, a JSON "backend": "rational" tag, or an explicit
/// exact request); the float form is always available via conversion.
struct MatrixInput {
    Backend backend = Backend::Float;
    Matrix<double> values_float{1};
    Matrix<Rational> values_rational{1};   // meaningful iff backend == Rational
    std::string digest;                    // content hash of the raw input text

    bool is_rational() const { return backend == Backend::Rational; }
};

/// FNV-1a 64-bit over raw bytes, rendered as "fnv1a:" + 16 hex digits.
std::string content_digest(const std::string& bytes);

/// Reads either the plain text format (first line n, then n rows of n
/// whitespace-separated entries) or the JSON object format, sniffed by the
/// first non-space byte. force_exact parses every token through the rational
/// reader even when no `p/q` token is present.
MatrixInput read_matrix(std::istream& in, bool force_exact = false);
MatrixInput read_matrix_file(const std::string& path, bool force_exact = false);

void write_matrix_text(std::ostream& out, const Matrix<double>& m);
void write_matrix_text(std::ostream& out, const Matrix<Rational>& m);

std::string matrix_to_text(const Matrix<double>& m);
std::string matrix_to_text(const Matrix<Rational>& m);

/// {"n": int, "rows": [[...], ...], "backend": "float"|"rational"}; rational
/// entries are "p/q" strings so the round trip stays exact.
nlohmann::json matrix_to_json(const Matrix<double>& m);
nlohmann::json matrix_to_json(const Matrix<Rational>& m);

Matrix<double> float_matrix_from_json(const nlohmann::json& j);
Matrix<Rational> rational_matrix_from_json(const nlohmann::json& j);

} // namespace orthorep::io

#endif
