#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "singeq/configuration.hpp"
#include "singeq/linalg.hpp"
#include "singeq/types.hpp"

namespace singeq {

/// The configuration admits no nonzero strength vector (A has trivial kernel).
class NoEquilibrium : public Error {
public:
    NoEquilibrium(const std::string& what, std::vector<double> sigma)
        : Error(what), sigma_(std::move(sigma)) {}
    const std::vector<double>& singular_values() const noexcept { return sigma_; }

private:
    std::vector<double> sigma_;
};

struct SolveOptions {
    /// Relative rank tolerance handed to the SVD threshold.
    double rel_tol = 1e-10;
    /// |λ| <= zero_eigenvalue_tol · σ_max counts towards the algebraic multiplicity.
    double zero_eigenvalue_tol = 1e-6;
};

struct EquilibriumSolution {
    /// First entry above tolerance is exactly 1 + 0i.
    StrengthVector strengths;
    /// ‖AΓ‖ / ‖Γ‖.
    double residual = 0.0;
    /// Geometric multiplicity of the zero singular value.
    std::size_t nullity = 0;
    /// Algebraic multiplicity of the zero eigenvalue.
    std::size_t zero_eigenvalue_multiplicity = 0;
    double threshold_used = 0.0;
    std::vector<double> singular_values;
    /// Orthonormal kernel basis; filled only when nullity > 1.
    std::vector<std::vector<Complex>> basis;
};

/// Finds Γ with AΓ = 0 from the SVD nullspace of the configuration matrix.
/// Throws NoEquilibrium when the kernel is trivial.
EquilibriumSolution solve_strengths(const PointSet& points, const SolveOptions& options = {});

/// Scales Γ so the first entry with |Γ_k| > tol · max|Γ| becomes exactly 1.
/// Throws ZeroStrengths for an all-zero vector.
StrengthVector normalize_strengths(std::span<const Complex> strengths, double tol = 1e-8);

/// Kernel of the collinear three-point matrix: (1, −(x3−x2)/(x3−x1), (x3−x2)/(x2−x1)).
StrengthVector collinear_three_closed_form(double x1, double x2, double x3);

/// Kernel for the triangle (0, 1, z): (1/(z−1), −1/z, 1), normalized to a leading 1.
StrengthVector triangle_closed_form(Complex z, double min_separation = kDefaultMinSeparation);

/// The unnormalized vector (1/(z−1), −1/z, 1).
StrengthVector triangle_closed_form_raw(Complex z, double min_separation = kDefaultMinSeparation);

/// ‖AΓ‖₂ / ‖Γ‖₂. Throws ZeroStrengths when Γ = 0, DimensionMismatch on length mismatch.
double residual(const ComplexMatrix& a, std::span<const Complex> strengths);

// ---------------------------------------------------------------------------
// Classification
// ---------------------------------------------------------------------------

/// Flow type of a single logarithmic singularity (or of the far field).
enum class FlowKind {
    vortex_ccw,
    vortex_cw,
    source,
    sink,
    spiral_source_ccw,
    spiral_source_cw,
    spiral_sink_ccw,
    spiral_sink_cw,
    null,
};

std::string_view to_string(FlowKind kind) noexcept;

/// Decision table: null when |s| <= tol·scale; a component is treated as zero
/// when its magnitude is <= tol·scale. Re > 0 rotates counter-clockwise, Im > 0
/// is a source.
FlowKind classify(Complex s, double scale, double tol);

struct FarFieldClass {
    Complex total_strength;
    FlowKind kind = FlowKind::null;
};

/// Classifies s = ΣΓ with the tolerance scaled by max|Γ|.
FarFieldClass classify_far_field(std::span<const Complex> strengths, double tol = 1e-6);

/// Same table for one strength; scaled by |Γ|, so only Γ = 0 is null.
FlowKind classify_singularity(Complex gamma, double tol = 1e-6);

struct CenterOfVorticity {
    /// ΣΓz / ΣΓ; meaningful only when `defined`.
    Complex value;
    bool defined = false;
    /// Raw first moment ΣΓz.
    Complex first_moment;
    Complex total_strength;
};

/// Undefined when |ΣΓ| <= tol · max|Γ|.
CenterOfVorticity center_of_vorticity(const PointSet& points, std::span<const Complex> strengths,
                                      double tol = 1e-8);

}  // namespace singeq
