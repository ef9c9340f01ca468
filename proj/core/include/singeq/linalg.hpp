#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "singeq/matrix.hpp"
#include "singeq/types.hpp"

namespace singeq {

// ---------------------------------------------------------------------------
// Singular value decomposition
// ---------------------------------------------------------------------------

struct SvdOptions {
    int max_sweeps = 80;
};

/// A = U Σ V†; sigma is sorted descending, ties keep the order the Jacobi
/// sweeps produced.
struct SvdResult {
    ComplexMatrix u;
    std::vector<double> sigma;
    ComplexMatrix v;
};

/// One-sided (Hestenes) Jacobi SVD of a square complex matrix.
///
/// Columns of a working copy of A are rotated pairwise until mutually
/// orthogonal; the accumulated rotations form V and the normalized columns
/// form U. Left vectors for exactly-zero singular values are completed to an
/// orthonormal basis. Tiny singular values come out with high relative
/// accuracy, which matters for the rank decision.
///
/// Throws ConvergenceFailure when `max_sweeps` sweeps do not orthogonalize.
SvdResult svd(const ComplexMatrix& a, const SvdOptions& options = {});

// ---------------------------------------------------------------------------
// Eigenvalues
// ---------------------------------------------------------------------------

struct EigenOptions {
    int max_iterations_per_eigenvalue = 30;
    /// Also run inverse iteration per eigenvalue and report ‖A q − λ q‖.
    bool compute_residuals = false;
};

struct EigenResult {
    /// Sorted by magnitude descending, then by argument ascending.
    std::vector<Complex> values;
    /// Empty unless EigenOptions::compute_residuals; aligned with `values`.
    std::vector<double> residuals;
};

/// Eigenvalues of a square complex matrix.
///
/// Exactly skew-symmetric matrices with N <= 3 use the closed-form
/// characteristic polynomial (λ³ + (a01² + a02² + a12²) λ for N = 3), which keeps
/// a triple zero at the equilateral triangle at rounding level instead of the
/// ε^(1/3) spread any backward-stable iteration gives for a 3x3 Jordan block.
/// Everything else goes through Householder Hessenberg reduction and
/// single-shift complex QR with Wilkinson shifts.
EigenResult eigenvalues(const ComplexMatrix& a, const EigenOptions& options = {});

/// ‖A q − λ q‖ for a unit q obtained by inverse iteration at λ.
double eigenpair_residual(const ComplexMatrix& a, Complex lambda);

// ---------------------------------------------------------------------------
// Rank and nullspace
// ---------------------------------------------------------------------------

struct RankReport {
    std::size_t rank = 0;
    std::size_t nullity = 0;
    double threshold_used = 0.0;
    /// Right singular vectors whose singular value is at or below the threshold.
    std::vector<std::vector<Complex>> nullspace_basis;
};

/// rel_tol · σ_max · N, or 1e-300 when σ_max is zero.
double rank_threshold(std::span<const double> sigma, double rel_tol);

RankReport rank_report(const SvdResult& decomposition, double rel_tol = 1e-10);

/// Numerical nullspace from the SVD; rel_tol must lie in (0, 1).
RankReport nullspace(const ComplexMatrix& a, double rel_tol = 1e-10);

// ---------------------------------------------------------------------------
// Determinant and Pfaffian
// ---------------------------------------------------------------------------

/// LU with partial pivoting.
Complex determinant(const ComplexMatrix& a);

/// Pf(A) for an exactly skew-symmetric matrix of even order.
/// Expansion along the first row up to N = 8, Householder tridiagonalization above.
/// Throws OddDimension for odd N.
Complex pfaffian(const ComplexMatrix& a);

/// Recursive expansion Pf(A) = Σ_j (−1)^(j+1) a_0j Pf(A without rows/cols 0, j).
Complex pfaffian_expansion(const ComplexMatrix& a);

/// Skew-symmetric congruence P A P^T with Householder P down to tridiagonal form.
Complex pfaffian_householder(const ComplexMatrix& a);

}  // namespace singeq
