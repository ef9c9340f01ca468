#include "singeq/equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace singeq {

namespace {

double max_magnitude(std::span<const Complex> values) noexcept
{
    double m = 0.0;
    for (const Complex& v : values) {
        m = std::max(m, std::abs(v));
    }
    return m;
}

Complex total(std::span<const Complex> values) noexcept
{
    Complex s{};
    for (const Complex& v : values) {
        s += v;
    }
    return s;
}

}  // namespace

StrengthVector normalize_strengths(std::span<const Complex> strengths, double tol)
{
    const double top = max_magnitude(strengths);
    if (top == 0.0) {
        throw ZeroStrengths("normalize_strengths: all strengths are zero");
    }
    std::size_t lead = 0;
    while (std::abs(strengths[lead]) <= tol * top) {
        ++lead;
    }
    const Complex pivot = strengths[lead];
    StrengthVector out(strengths.begin(), strengths.end());
    for (Complex& v : out) {
        v /= pivot;
    }
    out[lead] = Complex{1.0, 0.0};
    return out;
}

EquilibriumSolution solve_strengths(const PointSet& points, const SolveOptions& options)
{
    const ConfigurationMatrix a = build_matrix(points);
    const SvdResult decomposition = svd(a);
    const RankReport rank = rank_report(decomposition, options.rel_tol);

    if (rank.nullity == 0) {
        std::ostringstream os;
        os << "configuration of " << points.size() << " points has a trivial kernel (smallest singular value "
           << decomposition.sigma.back() << " > threshold " << rank.threshold_used << ")";
        throw NoEquilibrium(os.str(), decomposition.sigma);
    }

    EquilibriumSolution sol;
    sol.strengths = normalize_strengths(rank.nullspace_basis.front());
    sol.residual = residual(a, sol.strengths);
    sol.nullity = rank.nullity;
    sol.threshold_used = rank.threshold_used;
    sol.singular_values = decomposition.sigma;
    if (rank.nullity > 1) {
        sol.basis = rank.nullspace_basis;
    }

    const double sigma_max = decomposition.sigma.empty() ? 0.0 : decomposition.sigma.front();
    const EigenResult eig = eigenvalues(a);
    sol.zero_eigenvalue_multiplicity = static_cast<std::size_t>(
        std::count_if(eig.values.begin(), eig.values.end(), [&](Complex lambda) {
            return std::abs(lambda) <= options.zero_eigenvalue_tol * sigma_max;
        }));
    return sol;
}

StrengthVector collinear_three_closed_form(double x1, double x2, double x3)
{
    if (x1 == x2 || x2 == x3 || x1 == x3) {
        throw DegenerateConfiguration("collinear_three_closed_form: coincident abscissae");
    }
    if (!(x1 < x2 && x2 < x3)) {
        throw std::invalid_argument("collinear_three_closed_form: requires x1 < x2 < x3");
    }
    return {Complex{1.0}, Complex{-(x3 - x2) / (x3 - x1)}, Complex{(x3 - x2) / (x2 - x1)}};
}

StrengthVector triangle_closed_form_raw(Complex z, double min_separation)
{
    if (std::abs(z) < min_separation || std::abs(z - 1.0) < min_separation) {
        throw DegenerateConfiguration("triangle_closed_form: third vertex coincides with 0 or 1");
    }
    return {1.0 / (z - 1.0), -1.0 / z, Complex{1.0}};
}

StrengthVector triangle_closed_form(Complex z, double min_separation)
{
    return normalize_strengths(triangle_closed_form_raw(z, min_separation));
}

double residual(const ComplexMatrix& a, std::span<const Complex> strengths)
{
    if (a.cols() != strengths.size()) {
        throw DimensionMismatch("residual: strength vector length does not match the matrix");
    }
    const double gnorm = norm2(strengths);
    if (gnorm == 0.0) {
        throw ZeroStrengths("residual: strength vector is zero");
    }
    return norm2(multiply(a, strengths)) / gnorm;
}

std::string_view to_string(FlowKind kind) noexcept
{
    switch (kind) {
    case FlowKind::vortex_ccw: return "vortex_ccw";
    case FlowKind::vortex_cw: return "vortex_cw";
    case FlowKind::source: return "source";
    case FlowKind::sink: return "sink";
    case FlowKind::spiral_source_ccw: return "spiral_source_ccw";
    case FlowKind::spiral_source_cw: return "spiral_source_cw";
    case FlowKind::spiral_sink_ccw: return "spiral_sink_ccw";
    case FlowKind::spiral_sink_cw: return "spiral_sink_cw";
    case FlowKind::null: return "null";
    }
    return "null";
}

FlowKind classify(Complex s, double scale, double tol)
{
    const double cut = tol * scale;
    if (std::abs(s) <= cut) {
        return FlowKind::null;
    }
    const bool no_rotation = std::abs(s.real()) <= cut;
    const bool no_radial = std::abs(s.imag()) <= cut;
    if (no_radial) {
        return s.real() > 0.0 ? FlowKind::vortex_ccw : FlowKind::vortex_cw;
    }
    if (no_rotation) {
        return s.imag() > 0.0 ? FlowKind::source : FlowKind::sink;
    }
    const bool ccw = s.real() > 0.0;
    if (s.imag() > 0.0) {
        return ccw ? FlowKind::spiral_source_ccw : FlowKind::spiral_source_cw;
    }
    return ccw ? FlowKind::spiral_sink_ccw : FlowKind::spiral_sink_cw;
}

FarFieldClass classify_far_field(std::span<const Complex> strengths, double tol)
{
    FarFieldClass out;
    out.total_strength = total(strengths);
    out.kind = classify(out.total_strength, max_magnitude(strengths), tol);
    return out;
}

FlowKind classify_singularity(Complex gamma, double tol)
{
    return classify(gamma, std::abs(gamma), tol);
}

CenterOfVorticity center_of_vorticity(const PointSet& points, std::span<const Complex> strengths, double tol)
{
    if (points.size() != strengths.size()) {
        throw DimensionMismatch("center_of_vorticity: strengths do not match points");
    }
    CenterOfVorticity out;
    for (std::size_t k = 0; k < points.size(); ++k) {
        out.first_moment += strengths[k] * points[k];
        out.total_strength += strengths[k];
    }
    out.defined = std::abs(out.total_strength) > tol * max_magnitude(strengths);
    if (out.defined) {
        out.value = out.first_moment / out.total_strength;
    }
    return out;
}

}  // namespace singeq
