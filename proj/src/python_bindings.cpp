#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "orthorep/cayley.hpp"
#include "orthorep/generate.hpp"
#include "orthorep/normal_form.hpp"
#include "orthorep/rational.hpp"
#include "orthorep/sign_perturb.hpp"

namespace py = pybind11;
using namespace pybind11::literals;

namespace {

using FloatArray = py::array_t<double, py::array::c_style | py::array::forcecast>;

orthorep::Matrix<double> mat_from_array(const FloatArray& a) {
    if (a.ndim() != 2 || a.shape(0) != a.shape(1))
        throw orthorep::Error(orthorep::ErrorCode::NonSquare, "expected a square 2-d array");
    const int n = static_cast<int>(a.shape(0));
    orthorep::Matrix<double> m(n);
    auto view = a.unchecked<2>();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = view(i, j);
    return m;
}

py::array_t<double> array_from_mat(const orthorep::Matrix<double>& m) {
    const int n = m.size();
    py::array_t<double> a({n, n});
    auto view = a.mutable_unchecked<2>();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) view(i, j) = m(i, j);
    return a;
}

py::array_t<double> array_from_rational_mat(const orthorep::Matrix<orthorep::Rational>& m) {
    const int n = m.size();
    orthorep::Matrix<double> d(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) d(i, j) = orthorep::to_double(m(i, j));
    return array_from_mat(d);
}

orthorep::Matrix<orthorep::Rational> rational_mat(const std::vector<std::vector<std::string>>& rows) {
    const int n = static_cast<int>(rows.size());
    for (const auto& row : rows)
        if (static_cast<int>(row.size()) != n)
            throw orthorep::Error(orthorep::ErrorCode::NonSquare, "expected a square list of lists");
    orthorep::Matrix<orthorep::Rational> m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = orthorep::parse_rational(rows[i][j]);
    return m;
}

py::list sign_vectors_to_list(const std::vector<orthorep::SignVector>& vs) {
    py::list out;
    for (const auto& v : vs) out.append(v.values());
    return out;
}

py::dict float_report_dict(const orthorep::SignSearchReport<double>& rep) {
    py::dict d;
    d["signs"] = rep.signs.values();
    d["minors"] = rep.minor_values;
    d["det"] = rep.det;
    d["flips"] = rep.flips;
    return d;
}

py::dict exact_report_dict(const orthorep::SignSearchReport<orthorep::Rational>& rep) {
    py::list minors;
    for (const auto& v : rep.minor_values) minors.append(orthorep::to_string(v));
    py::dict d;
    d["signs"] = rep.signs.values();
    d["minors"] = minors;
    d["det"] = orthorep::to_string(rep.det);
    d["flips"] = rep.flips;
    return d;
}

std::vector<orthorep::Rational> rational_vec(const std::vector<std::string>& tokens) {
    std::vector<orthorep::Rational> out;
    out.reserve(tokens.size());
    for (const auto& t : tokens) out.push_back(orthorep::parse_rational(t));
    return out;
}

const char* block_kind_name(orthorep::CanonicalBlock::Kind k) {
    switch (k) {
        case orthorep::CanonicalBlock::Kind::PlusOne: return "+1";
        case orthorep::CanonicalBlock::Kind::MinusOne: return "-1";
        default: return "rotation";
    }
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Cayley representations of orthogonal matrices and diagonal sign perturbations";

    static py::exception<orthorep::Error> error(m, "Error");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const orthorep::Error& e) {
            const std::string msg =
                std::string(orthorep::error_code_name(e.code())) + ": " + e.what();
            PyErr_SetString(error.ptr(), msg.c_str());
        }
    });

    m.def(
        "cayley",
        [](const FloatArray& s) {
            return array_from_mat(
                orthorep::cayley_transform(orthorep::SkewSymmetric<double>::from_matrix(mat_from_array(s))));
        },
        "s"_a, "R = (I - S)(I + S)^-1 for skew-symmetric S.");

    m.def(
        "inverse_cayley",
        [](const FloatArray& r, double tolerance) {
            return array_from_mat(orthorep::inverse_cayley(mat_from_array(r), tolerance).matrix());
        },
        "r"_a, "tolerance"_a = orthorep::tol::orth,
        "Skew-symmetric S with R = (I - S)(I + S)^-1; raises on the -1 eigenvalue.");

    m.def(
        "obstruction",
        [](const FloatArray& r, double tolerance) {
            const auto check = orthorep::obstruction_check(mat_from_array(r), tolerance);
            py::dict d;
            d["obstructed"] = check.obstructed();
            d["witness"] = check.witness;
            return d;
        },
        "r"_a, "tolerance"_a = orthorep::tol::orth,
        "Whether I + R is singular, with the smallest-singular-value proxy as witness.");

    m.def(
        "normal_form",
        [](const FloatArray& r, bool pair_minus_ones, double tolerance) {
            const auto nf = orthorep::normal_form(mat_from_array(r), pair_minus_ones, tolerance);
            py::list blocks;
            for (const auto& b : nf.blocks()) {
                py::dict block;
                block["kind"] = block_kind_name(b.kind);
                block["angle"] = b.angle;
                blocks.append(block);
            }
            py::dict d;
            d["p"] = array_from_mat(nf.p());
            d["d"] = array_from_mat(nf.block_diagonal());
            d["blocks"] = blocks;
            d["paired"] = nf.paired_minus_ones();
            return d;
        },
        "r"_a, "pair_minus_ones"_a = false, "tolerance"_a = orthorep::tol::orth,
        "R = P D P^T with canonical blocks: +1s, rotations by ascending angle, -1s.");

    m.def(
        "rotation_sqrt",
        [](const FloatArray& r, double tolerance) {
            return array_from_mat(orthorep::rotation_sqrt(mat_from_array(r), tolerance));
        },
        "r"_a, "tolerance"_a = orthorep::tol::orth,
        "Rotation square root with every block angle halved; never obstructed.");

    m.def(
        "represent",
        [](const FloatArray& r, double tolerance) {
            const auto rep = orthorep::represent(mat_from_array(r), tolerance);
            py::dict d;
            d["variant"] = orthorep::variant_name(rep);
            std::visit(
                [&](const auto& v) {
                    using V = std::decay_t<decltype(v)>;
                    if constexpr (std::is_same_v<V, orthorep::TwoFactorRep<double>>) {
                        d["s1"] = array_from_mat(v.s1.matrix());
                        d["s2"] = array_from_mat(v.s2.matrix());
                    } else if constexpr (std::is_same_v<V, orthorep::SignedCayleyRep<double>>) {
                        d["e"] = v.e.values();
                        d["s"] = array_from_mat(v.s.matrix());
                    } else {
                        d["s"] = array_from_mat(v.s.matrix());
                    }
                },
                rep);
            return d;
        },
        "r"_a, "tolerance"_a = orthorep::tol::orth,
        "Best representation in the Cayley hierarchy: plain, squared, or signed.");

    m.def(
        "two_factor",
        [](const FloatArray& r, double tolerance) {
            const auto rep = orthorep::weyl_two_factor(mat_from_array(r), tolerance);
            const auto& tf = std::get<orthorep::TwoFactorRep<double>>(rep);
            return py::make_tuple(array_from_mat(tf.s1.matrix()), array_from_mat(tf.s2.matrix()));
        },
        "r"_a, "tolerance"_a = orthorep::tol::orth,
        "(S1, S2) with R = Cayley(S1) Cayley(S2), valid for every rotation.");

    m.def(
        "sign_assign",
        [](const FloatArray& a, const std::vector<double>& c, bool prefer_minus) {
            const auto tie = prefer_minus ? orthorep::TieBreak::PreferMinus : orthorep::TieBreak::PreferPlus;
            return float_report_dict(orthorep::sign_assign(mat_from_array(a), c, tie));
        },
        "a"_a, "c"_a, "prefer_minus"_a = false,
        "Greedy signs eps with det(diag(eps o c) + A) != 0, with the accepted minors.");

    m.def(
        "sign_assign_exact",
        [](const std::vector<std::vector<std::string>>& a, const std::vector<std::string>& c,
           bool prefer_minus) {
            const auto tie = prefer_minus ? orthorep::TieBreak::PreferMinus : orthorep::TieBreak::PreferPlus;
            return exact_report_dict(orthorep::sign_assign(rational_mat(a), rational_vec(c), tie));
        },
        "a"_a, "c"_a, "prefer_minus"_a = false,
        "Exact-arithmetic sign_assign over rational entries given as strings.");

    m.def(
        "fact_e",
        [](const FloatArray& a) { return orthorep::fact_e(mat_from_array(a)).values(); },
        "a"_a, "Signs eps with I + diag(eps) A invertible.");

    m.def(
        "fact_e_exact",
        [](const std::vector<std::vector<std::string>>& a) {
            return orthorep::fact_e(rational_mat(a)).values();
        },
        "a"_a, "Exact-arithmetic fact_e over rational entries given as strings.");

    m.def(
        "sign_vector_for_index",
        [](std::uint64_t k, int n) { return orthorep::sign_vector_for_index(k, n).values(); },
        "k"_a, "n"_a, "E_k in the binary indexing: entry i is -1 iff bit i of k is set.");

    m.def(
        "kahan_enumerate",
        [](const FloatArray& a, int max_n) {
            return sign_vectors_to_list(orthorep::kahan_enumerate(mat_from_array(a), max_n));
        },
        "a"_a, "max_n"_a = 16, "Every E_k with det(I + E_k A) != 0, ascending k.");

    m.def(
        "enumerate_invertible",
        [](const FloatArray& a, const std::vector<double>& c, int max_n) {
            return sign_vectors_to_list(orthorep::enumerate_invertible(mat_from_array(a), c, max_n));
        },
        "a"_a, "c"_a, "max_n"_a = 16,
        "Every sign vector eps with det(diag(eps o c) + A) != 0, ascending index.");

    m.def(
        "kahan_identity",
        [](const FloatArray& a, const FloatArray& b, int j) {
            return orthorep::kahan_identity_check(mat_from_array(a), mat_from_array(b), j);
        },
        "a"_a, "b"_a, "j"_a,
        "Both sides of det(A + B) = 2^(n-1) (det A + det B) for A, B equal outside column j.");

    m.def(
        "sign_matrix_sum",
        [](int n, int max_n) { return array_from_rational_mat(orthorep::sign_matrix_sum_check(n, max_n)); },
        "n"_a, "max_n"_a = 16, "Sum of all E_k, which is exactly the zero matrix.");

    m.def(
        "adjacent_flip_chain",
        [](int n, int max_n) {
            return sign_vectors_to_list(orthorep::adjacent_flip_chain(n, max_n));
        },
        "n"_a, "max_n"_a = 16, "The chain E_0 ... E_{2^n - 1} in ascending binary order.");

    m.def(
        "gen_haar_rotation",
        [](int n, std::uint64_t seed) { return array_from_mat(orthorep::gen_haar_rotation(n, seed)); },
        "n"_a, "seed"_a, "Haar-distributed rotation, deterministic per (n, seed).");

    m.def(
        "gen_haar_reflection",
        [](int n, std::uint64_t seed) { return array_from_mat(orthorep::gen_haar_reflection(n, seed)); },
        "n"_a, "seed"_a, "Haar-distributed orthogonal matrix with det = -1.");

    m.def(
        "gen_singular",
        [](int n, int rank, std::uint64_t seed) {
            return array_from_rational_mat(orthorep::gen_singular(n, rank, seed));
        },
        "n"_a, "rank"_a, "seed"_a, "Integer matrix of exact rank `rank` (rank < n).");

    m.def(
        "gen_int_matrix",
        [](int n, std::uint64_t seed, int lo, int hi) {
            return array_from_rational_mat(orthorep::gen_int_matrix(n, seed, lo, hi));
        },
        "n"_a, "seed"_a, "lo"_a = -5, "hi"_a = 5, "Random integer matrix with entries in [lo, hi].");

    m.def(
        "gen_skew",
        [](int n, std::uint64_t seed, double scale) {
            return array_from_mat(orthorep::gen_skew(n, seed, scale));
        },
        "n"_a, "seed"_a, "scale"_a = 1.0, "Random Gaussian skew-symmetric matrix.");
}
