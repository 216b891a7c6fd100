#include "orthorep/io.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "orthorep/error.hpp"

namespace orthorep::io {

namespace {

constexpr int kMaxParseDimension = 4096;

double parse_double_token(const std::string& token) {
    double value = 0.0;
    const char* begin = token.data();
    const char* end = begin + token.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end)
        throw Error(ErrorCode::ParseError, "bad numeric token '" + token + "'");
    return value;
}

int parse_dimension(const std::string& token) {
    int n = 0;
    const char* begin = token.data();
    const char* end = begin + token.size();
    auto [ptr, ec] = std::from_chars(begin, end, n);
    if (ec != std::errc{} || ptr != end || n < 1)
        throw Error(ErrorCode::ParseError, "bad dimension '" + token + "'");
    if (n > kMaxParseDimension)
        throw Error(ErrorCode::ParseError, "dimension " + token + " exceeds parser limit");
    return n;
}

MatrixInput parse_text(const std::string& content, bool force_exact) {
    std::istringstream in(content);
    std::vector<std::string> tokens;
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    if (tokens.empty())
        throw Error(ErrorCode::ParseError, "empty matrix input");

    const int n = parse_dimension(tokens[0]);
    if (static_cast<std::size_t>(n) * n + 1 != tokens.size())
        throw Error(ErrorCode::ParseError,
                    "expected " + std::to_string(n * n) + " entries for n = " +
                        std::to_string(n) + ", got " + std::to_string(tokens.size() - 1));

    bool rational = force_exact;
    for (std::size_t i = 1; !rational && i < tokens.size(); ++i)
        rational = tokens[i].find('/') != std::string::npos;

    MatrixInput out;
    out.digest = content_digest(content);
    if (rational) {
        Matrix<Rational> m(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(i, j) = parse_rational(tokens[1 + i * n + j]);
        out.backend = Backend::Rational;
        out.values_float = to_float(m);
        out.values_rational = std::move(m);
    } else {
        Matrix<double> m(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(i, j) = parse_double_token(tokens[1 + i * n + j]);
        out.backend = Backend::Float;
        out.values_float = std::move(m);
    }
    return out;
}

MatrixInput parse_json(const std::string& content, bool force_exact) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(content);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("bad JSON: ") + e.what());
    }
    const bool rational =
        force_exact || (j.contains("backend") && j["backend"] == "rational");

    MatrixInput out;
    out.digest = content_digest(content);
    if (rational) {
        Matrix<Rational> m = rational_matrix_from_json(j);
        out.backend = Backend::Rational;
        out.values_float = to_float(m);
        out.values_rational = std::move(m);
    } else {
        out.backend = Backend::Float;
        out.values_float = float_matrix_from_json(j);
    }
    return out;
}

nlohmann::json require_rows(const nlohmann::json& j, int* n_out) {
    if (!j.is_object() || !j.contains("n") || !j.contains("rows"))
        throw Error(ErrorCode::ParseError, "matrix JSON needs fields 'n' and 'rows'");
    if (!j["n"].is_number_integer())
        throw Error(ErrorCode::ParseError, "matrix JSON field 'n' must be an integer");
    const int n = j["n"].get<int>();
    if (n < 1 || n > kMaxParseDimension)
        throw Error(ErrorCode::ParseError, "bad matrix JSON dimension");
    const auto& rows = j["rows"];
    if (!rows.is_array() || static_cast<int>(rows.size()) != n)
        throw Error(ErrorCode::ParseError, "matrix JSON 'rows' must hold n rows");
    for (const auto& row : rows)
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw Error(ErrorCode::ParseError, "matrix JSON rows must each hold n entries");
    *n_out = n;
    return rows;
}

std::string double_to_token(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

} // namespace

std::string content_digest(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "fnv1a:%016llx", static_cast<unsigned long long>(h));
    return buf;
}

MatrixInput read_matrix(std::istream& in, bool force_exact) {
    std::ostringstream raw;
    raw << in.rdbuf();
    const std::string content = raw.str();

    std::size_t at = 0;
    while (at < content.size() && std::isspace(static_cast<unsigned char>(content[at]))) ++at;
    if (at == content.size())
        throw Error(ErrorCode::ParseError, "empty matrix input");
    return content[at] == '{' ? parse_json(content, force_exact)
                              : parse_text(content, force_exact);
}

MatrixInput read_matrix_file(const std::string& path, bool force_exact) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
    return read_matrix(in, force_exact);
}

void write_matrix_text(std::ostream& out, const Matrix<double>& m) {
    out << m.size() << '\n';
    for (int i = 0; i < m.size(); ++i) {
        for (int j = 0; j < m.size(); ++j)
            out << (j ? " " : "") << double_to_token(m(i, j));
        out << '\n';
    }
}

void write_matrix_text(std::ostream& out, const Matrix<Rational>& m) {
    out << m.size() << '\n';
    for (int i = 0; i < m.size(); ++i) {
        for (int j = 0; j < m.size(); ++j)
            out << (j ? " " : "") << to_string(m(i, j));
        out << '\n';
    }
}

std::string matrix_to_text(const Matrix<double>& m) {
    std::ostringstream out;
    write_matrix_text(out, m);
    return out.str();
}

std::string matrix_to_text(const Matrix<Rational>& m) {
    std::ostringstream out;
    write_matrix_text(out, m);
    return out.str();
}

nlohmann::json matrix_to_json(const Matrix<double>& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < m.size(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < m.size(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return {{"n", m.size()}, {"rows", std::move(rows)}, {"backend", "float"}};
}

nlohmann::json matrix_to_json(const Matrix<Rational>& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < m.size(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < m.size(); ++j) row.push_back(to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return {{"n", m.size()}, {"rows", std::move(rows)}, {"backend", "rational"}};
}

Matrix<double> float_matrix_from_json(const nlohmann::json& j) {
    int n = 0;
    const nlohmann::json rows = require_rows(j, &n);
    Matrix<double> m(n);
    for (int i = 0; i < n; ++i)
        for (int jj = 0; jj < n; ++jj) {
            const auto& cell = rows[i][jj];
            if (cell.is_number())
                m(i, jj) = cell.get<double>();
            else if (cell.is_string())
                m(i, jj) = to_double(parse_rational(cell.get<std::string>()));
            else
                throw Error(ErrorCode::ParseError, "matrix JSON entries must be numbers or strings");
        }
    return m;
}

Matrix<Rational> rational_matrix_from_json(const nlohmann::json& j) {
    int n = 0;
    const nlohmann::json rows = require_rows(j, &n);
    Matrix<Rational> m(n);
    for (int i = 0; i < n; ++i)
        for (int jj = 0; jj < n; ++jj) {
            const auto& cell = rows[i][jj];
            if (cell.is_number_integer())
                m(i, jj) = Rational(cell.get<long long>());
            else if (cell.is_string())
                m(i, jj) = parse_rational(cell.get<std::string>());
            else if (cell.is_number())
                throw Error(ErrorCode::ParseError,
                            "rational matrix JSON entries must be integers or 'p/q' strings");
            else
                throw Error(ErrorCode::ParseError, "matrix JSON entries must be numbers or strings");
        }
    return m;
}

} // namespace orthorep::io
