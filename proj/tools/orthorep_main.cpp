#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "orthorep/cayley.hpp"
#include "orthorep/error.hpp"
#include "orthorep/generate.hpp"
#include "orthorep/io.hpp"
#include "orthorep/linalg.hpp"
#include "orthorep/normal_form.hpp"
#include "orthorep/sign_perturb.hpp"
#include "orthorep/tolerances.hpp"

namespace {

using nlohmann::json;
using namespace orthorep;

constexpr int kCliEnumerationBound = 12;

int exit_code_for(ErrorCode c) {
    switch (c) {
        case ErrorCode::ParseError:
        case ErrorCode::NonSquare:
        case ErrorCode::DimensionMismatch:
        case ErrorCode::IndexOutOfRange:
            return 2;
        case ErrorCode::DimensionTooLarge:
            return 4;
        default:
            return 3;
    }
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == ',' || ch == ' ' || ch == '\t') {
            if (!cur.empty()) out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

json report_skeleton(const std::string& command, const std::string& backend,
                     const std::string& digest) {
    return {{"command", command},
            {"backend", backend},
            {"input_digest", digest},
            {"result", json::object()},
            {"residuals", json::object()}};
}

void print_matrix_block(const std::string& label, const Matrix<double>& m) {
    std::cout << label << ":\n" << io::matrix_to_text(m);
}

void print_residuals(const json& residuals) {
    for (const auto& [name, value] : residuals.items())
        std::cout << "residual " << name << ": " << value.get<double>() << "\n";
}

void print_report_header(const json& report) {
    std::cout << "command: " << report["command"].get<std::string>() << "\n"
              << "backend: " << report["backend"].get<std::string>() << "\n"
              << "input digest: " << report["input_digest"].get<std::string>() << "\n";
}

// ---------------------------------------------------------------- represent

struct RepresentArgs {
    std::string input;
    std::string mode = "auto";
    bool json_out = false;
    bool force = false;
    double tolerance = tol::orth;
};

OrthRepresentation<double> run_mode(const Matrix<double>& r, const std::string& mode,
                                    double tolerance) {
    if (mode == "auto") return represent(r, tolerance);

    detail::require_orthogonal(r, tolerance);
    const bool proper = determinant(r) > 0.0;
    const bool obstructed = obstruction_check(r, tolerance).obstructed();

    if (mode == "plain") {
        if (!proper || obstructed)
            throw Error(ErrorCode::ModeInapplicable,
                        obstructed ? "plain Cayley undefined: -1 is an eigenvalue"
                                   : "plain Cayley undefined: det(R) = -1");
        return PlainCayley<double>{inverse_cayley(r, tolerance)};
    }
    if (mode == "squared" || mode == "two-factor") {
        if (!proper)
            throw Error(ErrorCode::ModeInapplicable,
                        mode + " representation needs det(R) = +1");
        return mode == "squared" ? squared_cayley_rep(r, tolerance)
                                 : weyl_two_factor(r, tolerance);
    }
    return signed_cayley_rep(r, tolerance);
}

json representation_payload(const OrthRepresentation<double>& rep) {
    json payload;
    payload["variant"] = variant_name(rep);
    std::visit(
        [&](const auto& v) {
            using V = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<V, PlainCayley<double>> ||
                          std::is_same_v<V, SquaredCayleyRep<double>>) {
                payload["s"] = io::matrix_to_json(v.s.matrix());
            } else if constexpr (std::is_same_v<V, TwoFactorRep<double>>) {
                payload["s1"] = io::matrix_to_json(v.s1.matrix());
                payload["s2"] = io::matrix_to_json(v.s2.matrix());
            } else {
                payload["e"] = v.e.values();
                payload["s"] = io::matrix_to_json(v.s.matrix());
            }
        },
        rep);
    return payload;
}

// Rebuilds the representation from the serialized payload so every printed
// residual is recomputed from what the report actually carries.
OrthRepresentation<double> representation_from_payload(const json& payload) {
    const std::string variant = payload.at("variant").get<std::string>();
    auto skew = [&](const char* key) {
        return SkewSymmetric<double>::from_matrix(io::float_matrix_from_json(payload.at(key)));
    };
    if (variant == "plain-cayley") return PlainCayley<double>{skew("s")};
    if (variant == "squared-cayley") return SquaredCayleyRep<double>{skew("s")};
    if (variant == "two-factor") return TwoFactorRep<double>{skew("s1"), skew("s2")};
    return SignedCayleyRep<double>{SignVector(payload.at("e").get<std::vector<int>>()),
                                   skew("s")};
}

int cmd_represent(const RepresentArgs& args) {
    const io::MatrixInput input = io::read_matrix_file(args.input);
    const Matrix<double>& r = input.values_float;
    const double tolerance =
        args.force ? std::numeric_limits<double>::infinity() : args.tolerance;

    const OrthRepresentation<double> rep = run_mode(r, args.mode, tolerance);

    json report = report_skeleton("represent", "float", input.digest);
    report["result"] = representation_payload(rep);
    report["result"]["n"] = r.size();
    report["result"]["det"] = determinant(r);
    const auto obstruction = obstruction_check(r, tolerance);
    report["result"]["obstructed"] = obstruction.obstructed();
    report["result"]["obstruction_witness"] = obstruction.witness;

    const OrthRepresentation<double> replay = representation_from_payload(report["result"]);
    report["residuals"]["reconstruction"] = max_abs_diff(evaluate(replay), r);
    report["residuals"]["input_orthogonality"] = detail::orthogonality_defect(r);

    if (args.json_out) {
        std::cout << report.dump(2) << "\n";
        return 0;
    }
    print_report_header(report);
    std::cout << "variant: " << report["result"]["variant"].get<std::string>() << "\n"
              << "det(R): " << report["result"]["det"].get<double>() << "\n"
              << "obstructed: " << (obstruction.obstructed() ? "yes" : "no") << "\n";
    std::visit(
        [&](const auto& v) {
            using V = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<V, TwoFactorRep<double>>) {
                print_matrix_block("S1", v.s1.matrix());
                print_matrix_block("S2", v.s2.matrix());
            } else if constexpr (std::is_same_v<V, SignedCayleyRep<double>>) {
                std::cout << "E: " << v.e.str() << "\n";
                print_matrix_block("S", v.s.matrix());
            } else {
                print_matrix_block("S", v.s.matrix());
            }
        },
        rep);
    print_residuals(report["residuals"]);
    return 0;
}

// ------------------------------------------------------------------ perturb

struct PerturbArgs {
    std::string input;
    std::string c_list;
    std::string c_scale;
    bool exact = false;
    bool oracle = false;
    bool json_out = false;
};

template <typename T>
std::vector<T> build_magnitudes(const PerturbArgs& args, int n) {
    auto parse_one = [](const std::string& tok) -> T {
        if constexpr (std::is_same_v<T, double>) {
            return to_double(parse_rational(tok));
        } else {
            return parse_rational(tok);
        }
    };
    if (!args.c_list.empty()) {
        std::vector<T> c;
        for (const std::string& tok : split_list(args.c_list)) c.push_back(parse_one(tok));
        if (static_cast<int>(c.size()) != n)
            throw Error(ErrorCode::DimensionMismatch,
                        "--c needs " + std::to_string(n) + " values, got " +
                            std::to_string(c.size()));
        return c;
    }
    if (!args.c_scale.empty()) return std::vector<T>(n, parse_one(args.c_scale));
    return std::vector<T>(n, T(1));
}

template <typename T>
json perturb_payload(const Matrix<T>& a, const std::vector<T>& c,
                     const SignSearchReport<T>& rep) {
    json payload;
    payload["n"] = a.size();
    payload["signs"] = rep.signs.values();
    payload["flips"] = rep.flips;
    json minors = json::array();
    json c_json = json::array();
    if constexpr (std::is_same_v<T, double>) {
        for (double v : rep.minor_values) minors.push_back(v);
        for (double v : c) c_json.push_back(v);
        payload["det"] = rep.det;
    } else {
        for (const Rational& v : rep.minor_values) minors.push_back(to_string(v));
        for (const Rational& v : c) c_json.push_back(to_string(v));
        payload["det"] = to_string(rep.det);
    }
    payload["minors"] = std::move(minors);
    payload["c"] = std::move(c_json);
    return payload;
}

// det recomputed from the serialized signs and magnitudes, not from the
// in-memory report, so the residual certifies the payload itself.
template <typename T>
double perturb_replay_residual(const Matrix<T>& a, const json& payload) {
    const auto signs = payload.at("signs").get<std::vector<int>>();
    Matrix<T> m = a;
    for (int i = 0; i < m.size(); ++i) {
        T ci;
        if constexpr (std::is_same_v<T, double>) {
            ci = payload.at("c")[i].get<double>();
        } else {
            ci = parse_rational(payload.at("c")[i].get<std::string>());
        }
        m(i, i) += T(signs[i]) * ci;
    }
    const T det = determinant(m);
    if constexpr (std::is_same_v<T, double>) {
        return std::abs(det - payload.at("det").get<double>());
    } else {
        return det == parse_rational(payload.at("det").get<std::string>()) ? 0.0 : 1.0;
    }
}

template <typename T>
int run_perturb(const io::MatrixInput& input, const Matrix<T>& a, const PerturbArgs& args) {
    const std::vector<T> c = build_magnitudes<T>(args, a.size());
    const SignSearchReport<T> rep = sign_assign(a, c);

    constexpr bool is_float = std::is_same_v<T, double>;
    json report = report_skeleton("perturb", is_float ? "float" : "rational", input.digest);
    report["result"] = perturb_payload(a, c, rep);

    if (args.oracle) {
        require_enumerable(a.size(), kCliEnumerationBound);
        const std::vector<SignVector> survivors = enumerate_invertible(a, c);
        bool member = false;
        for (const SignVector& s : survivors) member = member || s == rep.signs;
        report["result"]["oracle"] = {{"size", survivors.size()},
                                      {"total", 1u << a.size()},
                                      {"contains_greedy", member}};
    }

    report["residuals"]["det_replay"] = perturb_replay_residual(a, report["result"]);

    if (args.json_out) {
        std::cout << report.dump(2) << "\n";
        return 0;
    }
    print_report_header(report);
    std::cout << "signs: " << rep.signs.str() << "\n"
              << "flips: " << rep.flips << "\n";
    std::cout << "minors:";
    for (const auto& v : report["result"]["minors"]) {
        if (v.is_string())
            std::cout << " " << v.get<std::string>();
        else
            std::cout << " " << v.get<double>();
    }
    std::cout << "\n";
    if (report["result"]["det"].is_string())
        std::cout << "det(E+A): " << report["result"]["det"].get<std::string>() << "\n";
    else
        std::cout << "det(E+A): " << report["result"]["det"].get<double>() << "\n";
    if (args.oracle) {
        const json& oracle = report["result"]["oracle"];
        std::cout << "oracle: " << oracle["size"].get<unsigned>() << " of "
                  << oracle["total"].get<unsigned>() << " sign vectors survive; greedy answer "
                  << (oracle["contains_greedy"].get<bool>() ? "is" : "IS NOT")
                  << " among them\n";
    }
    if (is_float)
        std::cout << "note: float determinants are advisory; rerun with --exact for an"
                     " exact nonzero certificate\n";
    print_residuals(report["residuals"]);
    return 0;
}

int cmd_perturb(const PerturbArgs& args) {
    const bool wants_exact =
        args.exact || args.c_list.find('/') != std::string::npos ||
        args.c_scale.find('/') != std::string::npos;
    const io::MatrixInput input = io::read_matrix_file(args.input, wants_exact);
    if (input.is_rational()) return run_perturb(input, input.values_rational, args);
    return run_perturb(input, input.values_float, args);
}

// ------------------------------------------------------------------- checks

struct ChecksArgs {
    int sum_zero = -1;
    bool det_identity = false;
    int trials = 50;
    int n = 5;
    std::string enumerate_path;
    int flip_chain = -1;
    std::uint64_t seed = 0;
    bool exact = false;
    bool json_out = false;
};

json check_sum_zero(int n) {
    const Matrix<Rational> sum = sign_matrix_sum_check(n, kCliEnumerationBound);
    const bool pass = sum == Matrix<Rational>(n);
    return {{"name", "sum-zero"}, {"n", n}, {"pass", pass}};
}

json check_det_identity(int trials, int n, std::uint64_t seed) {
    Sampler sampler(seed);
    int passed = 0;
    for (int t = 0; t < trials; ++t) {
        Matrix<Rational> a(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a(i, j) = Rational(sampler.uniform_int(-5, 5));
        const int col = sampler.uniform_int(1, n);
        Matrix<Rational> b = a;
        for (int i = 0; i < n; ++i) b(i, col - 1) = Rational(sampler.uniform_int(-5, 5));
        const auto [lhs, rhs] = kahan_identity_check(a, b, col);
        passed += lhs == rhs;
    }
    return {{"name", "det-identity"},
            {"trials", trials},
            {"n", n},
            {"seed", seed},
            {"passed", passed},
            {"pass", passed == trials}};
}

template <typename T>
json enumerate_result(const Matrix<T>& m) {
    const std::vector<SignVector> survivors = kahan_enumerate(m, kCliEnumerationBound);
    json list = json::array();
    for (const SignVector& s : survivors) list.push_back(s.values());
    return {{"name", "enumerate"},
            {"n", m.size()},
            {"survivors", std::move(list)},
            {"count", survivors.size()},
            {"total", 1u << m.size()},
            {"pass", !survivors.empty()}};
}

json check_flip_chain(int n) {
    const std::vector<SignVector> chain = adjacent_flip_chain(n, kCliEnumerationBound);
    bool pass = true;
    for (int level = 1; level <= n && pass; ++level) {
        const std::uint64_t half = std::uint64_t(1) << (level - 1);
        for (std::uint64_t k = 0; k < chain.size() && pass; ++k) {
            if (k & half) continue;
            int diffs = 0, where = -1;
            for (int i = 0; i < n; ++i)
                if (chain[k][i] != chain[k + half][i]) {
                    ++diffs;
                    where = i;
                }
            pass = diffs == 1 && where == level - 1;
        }
    }
    return {{"name", "flip-chain"}, {"n", n}, {"pass", pass}};
}

int cmd_checks(const ChecksArgs& args) {
    json checks = json::array();
    std::string digest = io::content_digest("");

    if (args.sum_zero >= 0) checks.push_back(check_sum_zero(args.sum_zero));
    if (args.det_identity) checks.push_back(check_det_identity(args.trials, args.n, args.seed));
    if (!args.enumerate_path.empty()) {
        const io::MatrixInput input = io::read_matrix_file(args.enumerate_path, args.exact);
        digest = input.digest;
        if (input.is_rational())
            checks.push_back(enumerate_result(input.values_rational));
        else
            checks.push_back(enumerate_result(input.values_float));
    }
    if (args.flip_chain >= 0) checks.push_back(check_flip_chain(args.flip_chain));

    if (checks.empty())
        throw Error(ErrorCode::ParseError,
                    "checks: pick at least one of --sum-zero, --det-identity, --enumerate,"
                    " --flip-chain");

    bool all_pass = true;
    for (const json& c : checks) all_pass = all_pass && c["pass"].get<bool>();

    json report = report_skeleton("checks", "rational", digest);
    report["result"]["checks"] = checks;
    report["result"]["pass"] = all_pass;

    if (args.json_out) {
        std::cout << report.dump(2) << "\n";
    } else {
        print_report_header(report);
        for (const json& c : checks) {
            std::cout << c["name"].get<std::string>();
            if (c.contains("n")) std::cout << " n=" << c["n"].get<int>();
            if (c.contains("trials"))
                std::cout << ": " << c["passed"].get<int>() << "/" << c["trials"].get<int>();
            if (c.contains("count"))
                std::cout << ": " << c["count"].get<unsigned>() << " of "
                          << c["total"].get<unsigned>() << " sign vectors survive";
            std::cout << ": " << (c["pass"].get<bool>() ? "PASS" : "FAIL") << "\n";
        }
    }
    return all_pass ? 0 : 1;
}

// ---------------------------------------------------------------------- gen

struct GenArgs {
    std::string kind;
    int n = 0;
    int rank = 0;
    std::uint64_t seed = 0;
    bool improper = false;
    bool json_out = false;
    std::string out_path;
};

int cmd_gen(const GenArgs& args) {
    std::string text;
    json matrix_json;
    json result;
    json residuals = json::object();
    std::string backend;

    if (args.kind == "haar") {
        const Matrix<double> q = args.improper ? gen_haar_reflection(args.n, args.seed)
                                               : gen_haar_rotation(args.n, args.seed);
        text = io::matrix_to_text(q);
        matrix_json = io::matrix_to_json(q);
        backend = "float";
        const double det = determinant(q);
        result = {{"kind", "haar"},
                  {"n", args.n},
                  {"seed", args.seed},
                  {"improper", args.improper},
                  {"det", det}};
        residuals["orthogonality"] = detail::orthogonality_defect(q);
        residuals["det_target"] = std::abs(det - (args.improper ? -1.0 : 1.0));
    } else {
        const Matrix<Rational> m = gen_singular(args.n, args.rank, args.seed);
        text = io::matrix_to_text(m);
        matrix_json = io::matrix_to_json(m);
        backend = "rational";
        result = {{"kind", "singular"},
                  {"n", args.n},
                  {"rank", args.rank},
                  {"seed", args.seed},
                  {"verified_rank", rational_rank(m)}};
    }
    result["matrix"] = std::move(matrix_json);

    json report = report_skeleton("gen", backend, io::content_digest(text));
    report["result"] = std::move(result);
    report["residuals"] = std::move(residuals);

    if (!args.out_path.empty()) {
        std::ofstream out(args.out_path, std::ios::binary);
        if (!out) throw Error(ErrorCode::ParseError, "cannot write '" + args.out_path + "'");
        out << text;
    }

    if (args.json_out) {
        std::cout << report.dump(2) << "\n";
    } else if (args.out_path.empty()) {
        std::cout << text;
    } else {
        print_report_header(report);
        std::cout << "wrote " << args.out_path << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cayley representations of orthogonal matrices and diagonal sign"
                 " perturbations; see README for formats and conventions"};
    app.require_subcommand(1);

    RepresentArgs rep_args;
    CLI::App* rep = app.add_subcommand(
        "represent", "Express an orthogonal matrix through a Cayley-type representation"
                     " (auto order: plain for unobstructed rotations, squared for"
                     " rotations with eigenvalue -1, signed otherwise)");
    rep->add_option("input", rep_args.input, "matrix file (text or JSON)")->required();
    rep->add_option("--mode", rep_args.mode, "representation to force")
        ->check(CLI::IsMember({"auto", "plain", "squared", "two-factor", "signed"}));
    rep->add_option("--tol", rep_args.tolerance, "orthogonality tolerance");
    rep->add_flag("--force", rep_args.force, "skip the orthogonality precheck");
    rep->add_flag("--json", rep_args.json_out, "emit a JSON report");

    PerturbArgs pert_args;
    CLI::App* pert = app.add_subcommand(
        "perturb", "Assign signs eps so that det(diag(eps*c) + A) is nonzero");
    pert->add_option("input", pert_args.input, "matrix file (text or JSON)")->required();
    pert->add_option("--c", pert_args.c_list, "comma-separated magnitudes c_i (default: all 1)");
    pert->add_option("--c-scale", pert_args.c_scale, "use c_i = s for every i");
    pert->add_flag("--exact", pert_args.exact, "force the exact rational backend");
    pert->add_flag("--oracle", pert_args.oracle,
                   "compare against exhaustive sign enumeration (n <= 12)");
    pert->add_flag("--json", pert_args.json_out, "emit a JSON report");

    ChecksArgs chk_args;
    CLI::App* chk = app.add_subcommand(
        "checks", "Verify the sign-matrix identities (E_k indexed in binary: entry i is"
                  " -1 iff bit i-1 of k is set)");
    chk->add_option("--sum-zero", chk_args.sum_zero, "verify sum of all E_k is zero at size n");
    chk->add_flag("--det-identity", chk_args.det_identity,
                  "verify det(A+B) = 2^(n-1)(det A + det B) on random one-column pairs");
    chk->add_option("--trials", chk_args.trials, "det-identity trial count");
    chk->add_option("--n", chk_args.n, "det-identity matrix size");
    chk->add_option("--enumerate", chk_args.enumerate_path,
                    "list sign vectors E with det(I + EA) != 0 for the matrix in this file");
    chk->add_option("--flip-chain", chk_args.flip_chain,
                    "verify the aligned-block single-flip pairing of E_0..E_{2^n-1}");
    chk->add_option("--seed", chk_args.seed, "PRNG seed for det-identity pairs");
    chk->add_flag("--exact", chk_args.exact, "parse --enumerate input exactly");
    chk->add_flag("--json", chk_args.json_out, "emit a JSON report");

    GenArgs gen_args;
    CLI::App* gen = app.add_subcommand("gen", "Generate test matrices");
    gen->add_option("kind", gen_args.kind, "haar | singular")
        ->required()
        ->check(CLI::IsMember({"haar", "singular"}));
    gen->add_option("--n", gen_args.n, "dimension")->required();
    gen->add_option("--rank", gen_args.rank, "target rank (singular only)");
    gen->add_option("--seed", gen_args.seed, "PRNG seed (mt19937_64)");
    gen->add_flag("--improper", gen_args.improper, "flip one column so det = -1 (haar only)");
    gen->add_option("-o,--out", gen_args.out_path, "write the matrix to this file");
    gen->add_flag("--json", gen_args.json_out, "emit a JSON report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (rep->parsed()) return cmd_represent(rep_args);
        if (pert->parsed()) return cmd_perturb(pert_args);
        if (chk->parsed()) return cmd_checks(chk_args);
        return cmd_gen(gen_args);
    } catch (const Error& e) {
        std::cerr << "error (" << error_code_name(e.code()) << "): " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
