#include "orthorep/normal_form.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "orthorep/linalg.hpp"

namespace orthorep {

namespace {

using Column = std::vector<double>;

double dot(const Column& a, const Column& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm(const Column& a) { return std::sqrt(dot(a, a)); }

void project_out(Column& v, const std::vector<Column>& basis) {
    for (const Column& b : basis) {
        const double f = dot(v, b);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] -= f * b[i];
    }
}

Column mat_vec(const Matrix<double>& m, const Column& v) {
    Column r(v.size(), 0.0);
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j) r[i] += m(i, j) * v[j];
    return r;
}

struct ExtractedBlock {
    CanonicalBlock block;
    std::vector<Column> columns;   // 1 or 2 columns of P
};

// Splits R into invariant subspaces. Each eigenvector u of (R + R^T)/2
// satisfies R^2 u = 2 mu R u - u with mu = u^T R u, so span{u, Ru} is
// R-invariant: either Ru = +-u (a 1-dimensional block) or the pair
// (u, (Ru - mu u)/|Ru - mu u|) carries a plane rotation. Normalizing the
// second basis vector from Ru - mu u makes sin(angle) >= 0, which fixes the
// orientation convention. Degenerate eigenvalues hand us an arbitrary basis
// of the merged eigenspace, so extracted columns are deflated away from the
// remaining candidates before they are used.
std::vector<ExtractedBlock> extract_invariant_blocks(const Matrix<double>& r) {
    const int n = r.size();
    const SymmetricEigen eig = jacobi_symmetric((r + r.transpose()).scaled(0.5));

    std::vector<ExtractedBlock> out;
    std::vector<Column> accepted;    // all accepted P columns, for deflation
    accepted.reserve(n);

    // A candidate whose residual after deflation is below the pass threshold
    // is skipped; lower thresholds only matter when a degenerate cluster
    // spreads the leftover direction across several candidates.
    const double pass_thresholds[] = {0.5, 1e-2};
    for (double threshold : pass_thresholds) {
        if (static_cast<int>(accepted.size()) == n) break;
        for (int idx = 0; idx < n && static_cast<int>(accepted.size()) < n; ++idx) {
            Column u = eig.vectors.column(idx);
            project_out(u, accepted);
            const double nu = norm(u);
            if (nu < threshold) continue;
            for (double& x : u) x /= nu;
            project_out(u, accepted);   // second pass for orthogonality hygiene
            const double nu2 = norm(u);
            for (double& x : u) x /= nu2;

            const Column ru = mat_vec(r, u);
            const double mu = dot(u, ru);
            Column z = ru;
            for (int i = 0; i < n; ++i) z[i] -= mu * u[i];
            project_out(z, accepted);
            const double s = norm(z);

            ExtractedBlock eb;
            if (s <= tol::plane_split) {
                eb.block = mu >= 0.0 ? CanonicalBlock::plus_one() : CanonicalBlock::minus_one();
                eb.columns = {u};
            } else {
                for (double& x : z) x /= s;
                eb.block = CanonicalBlock::rotation(std::atan2(s, mu));
                eb.columns = {u, z};
            }
            for (const Column& c : eb.columns) accepted.push_back(c);
            out.push_back(std::move(eb));
        }
    }

    if (static_cast<int>(accepted.size()) != n)
        throw Error(ErrorCode::NotOrthogonal,
                    "invariant subspace extraction did not span the full space");
    return out;
}

NormalForm assemble(std::vector<ExtractedBlock> extracted, int n, bool paired) {
    // Canonical order: +1 blocks, rotations by ascending angle, -1 blocks.
    auto rank_of = [](const ExtractedBlock& e) {
        switch (e.block.kind) {
            case CanonicalBlock::Kind::PlusOne: return 0;
            case CanonicalBlock::Kind::Rotation: return 1;
            default: return 2;
        }
    };
    std::stable_sort(extracted.begin(), extracted.end(),
                     [&](const ExtractedBlock& a, const ExtractedBlock& b) {
                         const int ra = rank_of(a), rb = rank_of(b);
                         if (ra != rb) return ra < rb;
                         return a.block.angle < b.block.angle;
                     });

    Matrix<double> p(n);
    std::vector<CanonicalBlock> blocks;
    blocks.reserve(extracted.size());
    int col = 0;
    for (const ExtractedBlock& e : extracted) {
        for (const Column& c : e.columns) {
            for (int i = 0; i < n; ++i) p(i, col) = c[i];
            ++col;
        }
        blocks.push_back(e.block);
    }
    return NormalForm(std::move(p), std::move(blocks), paired);
}

} // namespace

Matrix<double> NormalForm::block_diagonal() const {
    int n = 0;
    for (const auto& b : blocks_) n += b.dim();
    Matrix<double> d(n);
    int at = 0;
    for (const auto& b : blocks_) {
        switch (b.kind) {
            case CanonicalBlock::Kind::PlusOne:
                d(at, at) = 1.0;
                break;
            case CanonicalBlock::Kind::MinusOne:
                d(at, at) = -1.0;
                break;
            case CanonicalBlock::Kind::Rotation:
                d(at, at) = std::cos(b.angle);
                d(at, at + 1) = -std::sin(b.angle);
                d(at + 1, at) = std::sin(b.angle);
                d(at + 1, at + 1) = std::cos(b.angle);
                break;
        }
        at += b.dim();
    }
    return d;
}

Matrix<double> NormalForm::reconstruct() const {
    return p_ * block_diagonal() * p_.transpose();
}

NormalForm normal_form(const Matrix<double>& r, bool pair_minus_ones, double tolerance) {
    detail::require_orthogonal(r, tolerance);
    const int n = r.size();
    std::vector<ExtractedBlock> extracted = extract_invariant_blocks(r);

    if (pair_minus_ones) {
        std::vector<ExtractedBlock> rebuilt;
        std::vector<ExtractedBlock> minus;
        for (auto& e : extracted) {
            if (e.block.kind == CanonicalBlock::Kind::MinusOne)
                minus.push_back(std::move(e));
            else
                rebuilt.push_back(std::move(e));
        }
        std::size_t i = 0;
        for (; i + 1 < minus.size(); i += 2) {
            ExtractedBlock pair;
            pair.block = CanonicalBlock::rotation(std::numbers::pi);
            pair.columns = {minus[i].columns[0], minus[i + 1].columns[0]};
            rebuilt.push_back(std::move(pair));
        }
        if (i < minus.size()) rebuilt.push_back(std::move(minus[i]));
        extracted = std::move(rebuilt);
    }

    return assemble(std::move(extracted), n, pair_minus_ones);
}

Matrix<double> rotation_sqrt(const Matrix<double>& r, double tolerance) {
    detail::require_orthogonal(r, tolerance);
    if (determinant(r) < 0.0)
        throw Error(ErrorCode::NotSpecialOrthogonal,
                    "rotation_sqrt requires det(R) = +1");

    // det +1 means an even number of -1 eigenvalues, so pairing leaves no
    // MinusOne block and every angle lands in (0, pi].
    const NormalForm nf = normal_form(r, /*pair_minus_ones=*/true, tolerance);
    if (nf.count(CanonicalBlock::Kind::MinusOne) != 0)
        throw Error(ErrorCode::NotSpecialOrthogonal,
                    "unpaired -1 eigenvalue; matrix is not a rotation");

    std::vector<CanonicalBlock> halved = nf.blocks();
    for (auto& b : halved)
        if (b.kind == CanonicalBlock::Kind::Rotation) b.angle *= 0.5;

    const NormalForm root(nf.p(), std::move(halved), nf.paired_minus_ones());
    return root.reconstruct();
}

OrthRepresentation<double> squared_cayley_rep(const Matrix<double>& r, double tolerance) {
    return SquaredCayleyRep<double>{inverse_cayley(rotation_sqrt(r, tolerance), tolerance)};
}

OrthRepresentation<double> weyl_two_factor(const Matrix<double>& r, double tolerance) {
    const auto squared = squared_cayley_rep(r, tolerance);
    const auto& s = std::get<SquaredCayleyRep<double>>(squared).s;
    return TwoFactorRep<double>{s, s};
}

OrthRepresentation<double> represent(const Matrix<double>& r, double tolerance) {
    const auto obstruction = obstruction_check(r, tolerance);
    const bool proper = determinant(r) > 0.0;
    if (proper && !obstruction.obstructed()) return PlainCayley<double>{inverse_cayley(r, tolerance)};
    if (proper) return squared_cayley_rep(r, tolerance);
    return signed_cayley_rep(r, tolerance);
}

} // namespace orthorep
