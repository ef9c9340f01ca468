#include "singeq/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "singeq/random.hpp"

namespace singeq {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_count(std::size_t n, const char* who)
{
    if (n < 2) {
        throw std::invalid_argument(std::string(who) + ": at least two points are required");
    }
}

bool well_separated(const std::vector<Complex>& points, double min_separation)
{
    return closest_pair(points).distance >= min_separation;
}

[[noreturn]] void infeasible(const char* who, const std::vector<Complex>& points, double min_separation)
{
    const ClosestPair pair = closest_pair(points);
    std::ostringstream os;
    os << who << ": points " << pair.first << " and " << pair.second << " are " << pair.distance
       << " apart, below the minimum separation " << min_separation;
    throw DegenerateConfiguration(os.str(), pair.first, pair.second);
}

/// Runs `draw` until it yields a well-separated set or the retry cap is hit.
template <typename Draw>
PointSet place_randomly(const char* who, std::uint64_t seed, double min_separation, Draw draw)
{
    const Rng root(seed);
    std::vector<Complex> points;
    for (int attempt = 0; attempt < kMaxPlacementRetries; ++attempt) {
        Rng rng = root.split(static_cast<std::uint64_t>(attempt));
        points = draw(rng);
        if (well_separated(points, min_separation)) {
            return PointSet(std::move(points), min_separation);
        }
    }
    infeasible(who, points, min_separation);
}

PointSet checked(const char* who, std::vector<Complex> points, double min_separation)
{
    if (!well_separated(points, min_separation)) {
        infeasible(who, points, min_separation);
    }
    return PointSet(std::move(points), min_separation);
}

/// dr/dθ for the analytic curves; custom curves use the slope of their interpolant.
double polar_derivative(const CurveSpec& spec, double theta)
{
    switch (spec.curve) {
    case PolarCurve::flower:
        return -2.0 * std::sin(2.0 * theta);
    case PolarCurve::figure_eight:
        return -std::sin(2.0 * theta);
    case PolarCurve::custom: {
        const double h = 1e-7;
        return (polar_radius(spec, theta + h) - polar_radius(spec, theta - h)) / (2.0 * h);
    }
    }
    return 0.0;
}

void validate_custom(const CurveSpec& spec)
{
    const auto& s = spec.samples;
    if (s.size() < 2) {
        throw std::invalid_argument("custom curve: at least two samples are required");
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (!std::isfinite(s[i].theta) || !std::isfinite(s[i].r)) {
            throw std::invalid_argument("custom curve: non-finite sample");
        }
        if (i > 0 && !(s[i].theta > s[i - 1].theta)) {
            throw std::invalid_argument("custom curve: θ must be strictly increasing");
        }
    }
    if (s.front().theta > 1e-12 || s.back().theta < kTwoPi - 1e-12) {
        throw std::invalid_argument("custom curve: samples must cover [0, 2π]");
    }
}

}  // namespace

std::string_view to_string(Distribution d) noexcept
{
    switch (d) {
    case Distribution::even_parameter: return "even_parameter";
    case Distribution::even_arclength: return "even_arclength";
    case Distribution::random: return "random";
    }
    return "even_parameter";
}

std::optional<Distribution> parse_distribution(std::string_view text) noexcept
{
    if (text == "even_parameter" || text == "even") {
        return Distribution::even_parameter;
    }
    if (text == "even_arclength" || text == "arclength") {
        return Distribution::even_arclength;
    }
    if (text == "random" || text == "random_parameter") {
        return Distribution::random;
    }
    return std::nullopt;
}

std::string_view to_string(PolarCurve c) noexcept
{
    switch (c) {
    case PolarCurve::flower: return "flower";
    case PolarCurve::figure_eight: return "figure_eight";
    case PolarCurve::custom: return "custom";
    }
    return "flower";
}

std::optional<PolarCurve> parse_polar_curve(std::string_view text) noexcept
{
    if (text == "flower") {
        return PolarCurve::flower;
    }
    if (text == "figure_eight" || text == "figure-eight" || text == "eight") {
        return PolarCurve::figure_eight;
    }
    if (text == "custom") {
        return PolarCurve::custom;
    }
    return std::nullopt;
}

double polar_radius(const CurveSpec& spec, double theta)
{
    switch (spec.curve) {
    case PolarCurve::flower:
        return std::cos(2.0 * theta);
    case PolarCurve::figure_eight: {
        const double c = std::cos(theta);
        return c * c;
    }
    case PolarCurve::custom: {
        const auto& s = spec.samples;
        double t = std::fmod(theta - s.front().theta, kTwoPi);
        if (t < 0.0) {
            t += kTwoPi;
        }
        t += s.front().theta;
        auto hi = std::upper_bound(s.begin(), s.end(), t,
                                   [](double value, const PolarSample& p) { return value < p.theta; });
        if (hi == s.begin()) {
            return s.front().r;
        }
        if (hi == s.end()) {
            return s.back().r;
        }
        const auto lo = hi - 1;
        const double w = (t - lo->theta) / (hi->theta - lo->theta);
        return (1.0 - w) * lo->r + w * hi->r;
    }
    }
    return 0.0;
}

Complex polar_point(const CurveSpec& spec, double theta)
{
    return polar_radius(spec, theta) * std::polar(1.0, theta);
}

double ArclengthTable::theta_at(double s) const
{
    if (s <= 0.0) {
        return theta.front();
    }
    if (s >= total()) {
        return theta.back();
    }
    const auto it = std::upper_bound(length.begin(), length.end(), s);
    const std::size_t hi = static_cast<std::size_t>(it - length.begin());
    const std::size_t lo = hi - 1;
    const double span = length[hi] - length[lo];
    const double w = span > 0.0 ? (s - length[lo]) / span : 0.0;
    return theta[lo] + w * (theta[hi] - theta[lo]);
}

ArclengthTable build_arclength_table(const CurveSpec& spec, std::size_t intervals)
{
    if (spec.curve == PolarCurve::custom) {
        validate_custom(spec);
    }
    ArclengthTable table;
    table.theta.resize(intervals + 1);
    table.length.resize(intervals + 1);
    const double h = kTwoPi / static_cast<double>(intervals);
    auto speed = [&](double t) { return std::hypot(polar_radius(spec, t), polar_derivative(spec, t)); };
    double prev_speed = speed(spec.phase);
    table.theta[0] = spec.phase;
    table.length[0] = 0.0;
    for (std::size_t i = 1; i <= intervals; ++i) {
        const double t = spec.phase + h * static_cast<double>(i);
        const double sp = speed(t);
        table.theta[i] = t;
        table.length[i] = table.length[i - 1] + 0.5 * h * (prev_speed + sp);
        prev_speed = sp;
    }
    return table;
}

PointSet generate_collinear(std::size_t n, Distribution distribution, std::uint64_t seed, double min_separation)
{
    require_count(n, "generate_collinear");
    if (distribution != Distribution::random) {
        std::vector<Complex> points(n);
        for (std::size_t k = 0; k < n; ++k) {
            points[k] = static_cast<double>(k) / static_cast<double>(n - 1);
        }
        return checked("generate_collinear", std::move(points), min_separation);
    }
    return place_randomly("generate_collinear", seed, min_separation, [n](Rng& rng) {
        std::vector<double> xs{0.0, 1.0};
        for (std::size_t k = 2; k < n; ++k) {
            double x = 0.0;
            while (x == 0.0) {
                x = rng.uniform();
            }
            xs.push_back(x);
        }
        std::sort(xs.begin(), xs.end());
        return std::vector<Complex>(xs.begin(), xs.end());
    });
}

PointSet generate_circle(std::size_t n, Distribution distribution, double radius, double phase, std::uint64_t seed,
                         double min_separation)
{
    require_count(n, "generate_circle");
    if (!(radius > 0.0) || !std::isfinite(radius)) {
        throw std::invalid_argument("generate_circle: radius must be positive");
    }
    if (distribution != Distribution::random) {
        std::vector<Complex> points(n);
        for (std::size_t k = 0; k < n; ++k) {
            points[k] = std::polar(radius, kTwoPi * static_cast<double>(k) / static_cast<double>(n) + phase);
        }
        return checked("generate_circle", std::move(points), min_separation);
    }
    return place_randomly("generate_circle", seed, min_separation, [=](Rng& rng) {
        std::vector<double> angles(n);
        for (double& a : angles) {
            a = rng.uniform(0.0, kTwoPi);
        }
        std::sort(angles.begin(), angles.end());
        std::vector<Complex> points;
        points.reserve(n);
        for (double a : angles) {
            points.push_back(std::polar(radius, a + phase));
        }
        return points;
    });
}

PointSet generate_polar_curve(const CurveSpec& spec, std::size_t n, std::uint64_t seed, double min_separation)
{
    require_count(n, "generate_polar_curve");
    if (spec.curve == PolarCurve::custom) {
        validate_custom(spec);
    }
    switch (spec.distribution) {
    case Distribution::even_parameter: {
        std::vector<Complex> points(n);
        for (std::size_t k = 0; k < n; ++k) {
            points[k] = polar_point(spec, spec.phase + kTwoPi * static_cast<double>(k) / static_cast<double>(n));
        }
        return checked("generate_polar_curve", std::move(points), min_separation);
    }
    case Distribution::even_arclength: {
        const ArclengthTable table = build_arclength_table(spec);
        std::vector<Complex> points(n);
        for (std::size_t k = 0; k < n; ++k) {
            const double s = table.total() * static_cast<double>(k) / static_cast<double>(n);
            points[k] = polar_point(spec, table.theta_at(s));
        }
        return checked("generate_polar_curve", std::move(points), min_separation);
    }
    case Distribution::random:
        break;
    }
    return place_randomly("generate_polar_curve", seed, min_separation, [&](Rng& rng) {
        std::vector<double> thetas(n);
        for (double& t : thetas) {
            t = rng.uniform(0.0, kTwoPi);
        }
        std::sort(thetas.begin(), thetas.end());
        std::vector<Complex> points;
        points.reserve(n);
        for (double t : thetas) {
            points.push_back(polar_point(spec, t + spec.phase));
        }
        return points;
    });
}

PointSet generate_random_plane(std::size_t n, const RegionSpec& region, double min_separation)
{
    require_count(n, "generate_random_plane");
    if (!(region.x_max > region.x_min) || !(region.y_max > region.y_min)) {
        throw std::invalid_argument("generate_random_plane: empty rectangle");
    }
    return place_randomly("generate_random_plane", region.seed, min_separation, [&](Rng& rng) {
        std::vector<Complex> points;
        points.reserve(n);
        for (std::size_t k = 0; k < n; ++k) {
            const double x = rng.uniform(region.x_min, region.x_max);
            const double y = rng.uniform(region.y_min, region.y_max);
            points.emplace_back(x, y);
        }
        return points;
    });
}

}  // namespace singeq
