#ifndef ORTHOREP_TOLERANCES_HPP
#define ORTHOREP_TOLERANCES_HPP

namespace orthorep::tol {

// All float-backend thresholds live here so tests and the CLI agree on one
// set of knobs. Exact-rational paths never consult these.

/// Max allowed |S + S^T| entry when constructing a skew-symmetric matrix.
inline constexpr double skew = 1e-12;

/// Relative pivot threshold for float solves: a pivot counts as zero when
/// |pivot| < pivot_rel * max|A|.
inline constexpr double pivot_rel = 1e-13;

/// Residual bound used by solve() postcondition checks in tests.
inline constexpr double solve = 1e-10;

/// Max allowed |R^T R - I| entry for a matrix to count as orthogonal.
inline constexpr double orth = 1e-8;

/// min_singular_proxy(I + R) below this routes R to the extended
/// representations (the -1-eigenvalue obstruction). Kept an order above
/// `solve` so borderline matrices are classified as obstructed rather
/// than inverted unstably.
inline constexpr double cayley = 1e-9;

/// Reconstruction residual bound for normal forms and representations.
inline constexpr double normal_form = 1e-9;

/// Relative floor on |det(I + EA)| before fact_e retries with the
/// opposite tie-break (float backend only).
inline constexpr double fact_e = 1e-12;

/// Radius for grouping eigenvalues of (R + R^T)/2 into blocks.
inline constexpr double eig_cluster = 1e-7;

/// |R u - (u^T R u) u| below this treats u as a 1-dimensional invariant
/// subspace (a +1 or -1 eigenvector) instead of a rotation plane.
inline constexpr double plane_split = 1e-11;

} // namespace orthorep::tol

#endif
