#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "singeq/types.hpp"

namespace singeq {

/// Point placement along a line, circle or polar curve.
///   even_parameter: equal steps of the curve parameter (x on a line, θ on circles and polar curves)
///   even_arclength: equal arclength steps (identical to even_parameter on lines and circles)
///   random:         i.i.d. uniform parameter draws, sorted
enum class Distribution { even_parameter, even_arclength, random };

std::string_view to_string(Distribution d) noexcept;
std::optional<Distribution> parse_distribution(std::string_view text) noexcept;

enum class PolarCurve {
    flower,        ///< r(θ) = cos 2θ
    figure_eight,  ///< r(θ) = cos² θ
    custom,        ///< piecewise-linear r(θ) through user samples
};

std::string_view to_string(PolarCurve c) noexcept;
std::optional<PolarCurve> parse_polar_curve(std::string_view text) noexcept;

struct PolarSample {
    double theta;
    double r;
};

struct CurveSpec {
    PolarCurve curve = PolarCurve::flower;
    Distribution distribution = Distribution::even_parameter;
    double phase = 0.0;
    /// Required for PolarCurve::custom: strictly increasing θ covering [0, 2π].
    std::vector<PolarSample> samples;
};

struct RegionSpec {
    double x_min = -1.0;
    double x_max = 1.0;
    double y_min = -1.0;
    double y_max = 1.0;
    std::uint64_t seed = 0;
};

/// Number of uniform θ intervals in the cumulative arclength table.
inline constexpr std::size_t kArclengthTableSize = 100000;
/// Redraws allowed before a random placement is declared infeasible.
inline constexpr int kMaxPlacementRetries = 64;

/// Points on [0, 1]; even: x_k = k/(n−1); random: endpoints pinned, interior sorted uniform.
PointSet generate_collinear(std::size_t n, Distribution distribution, std::uint64_t seed = 0,
                            double min_separation = kDefaultMinSeparation);

/// even: z_k = radius · e^{i(2πk/n + phase)}; random: sorted uniform angles plus phase.
PointSet generate_circle(std::size_t n, Distribution distribution, double radius = 1.0, double phase = 0.0,
                         std::uint64_t seed = 0, double min_separation = kDefaultMinSeparation);

/// Points z = r(θ) e^{iθ} with the signed-radius convention (r < 0 reflects
/// through the origin). Throws DegenerateConfiguration when the placement
/// cannot keep the points apart (polar curves pass through the origin).
PointSet generate_polar_curve(const CurveSpec& spec, std::size_t n, std::uint64_t seed = 0,
                              double min_separation = kDefaultMinSeparation);

/// I.i.d. uniform points in an axis-aligned rectangle.
PointSet generate_random_plane(std::size_t n, const RegionSpec& region,
                               double min_separation = kDefaultMinSeparation);

/// r(θ) for the curve (custom curves interpolate their samples periodically).
double polar_radius(const CurveSpec& spec, double theta);

/// r(θ) e^{iθ}.
Complex polar_point(const CurveSpec& spec, double theta);

/// Cumulative arclength table over θ ∈ [phase, phase + 2π], trapezoidal rule.
struct ArclengthTable {
    std::vector<double> theta;
    std::vector<double> length;
    double total() const { return length.back(); }
    /// Linear inversion s -> θ.
    double theta_at(double s) const;
};

ArclengthTable build_arclength_table(const CurveSpec& spec, std::size_t intervals = kArclengthTableSize);

}  // namespace singeq
