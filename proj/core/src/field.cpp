#include "singeq/field.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace singeq {

namespace {

const Complex kTwoPiI{0.0, 2.0 * std::numbers::pi};

void check_sizes(std::span<const Complex> points, std::span<const Complex> strengths)
{
    if (points.size() != strengths.size()) {
        throw DimensionMismatch("field: strengths do not match points");
    }
}

/// Index of the nearest singularity and its distance.
std::pair<std::size_t, double> nearest(std::span<const Complex> points, Complex z)
{
    std::size_t best = 0;
    double dist = std::numeric_limits<double>::infinity();
    for (std::size_t b = 0; b < points.size(); ++b) {
        const double d = std::abs(z - points[b]);
        if (d < dist) {
            dist = d;
            best = b;
        }
    }
    return {best, dist};
}

Complex raw_velocity(std::span<const Complex> points, std::span<const Complex> strengths, Complex z)
{
    Complex sum;
    for (std::size_t b = 0; b < points.size(); ++b) {
        sum += strengths[b] / (z - points[b]);
    }
    return std::conj(sum / kTwoPiI);
}

std::string format_g17(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace

Complex velocity_at(std::span<const Complex> points, std::span<const Complex> strengths, Complex z,
                    double min_separation)
{
    check_sizes(points, strengths);
    const auto [index, dist] = nearest(points, z);
    if (dist < min_separation || dist == 0.0) {
        std::ostringstream os;
        os << "velocity_at: z lies " << dist << " from singularity " << index;
        throw SingularPoint(os.str(), index);
    }
    return raw_velocity(points, strengths, z);
}

Window default_window(std::span<const Complex> points)
{
    if (points.empty()) {
        return {};
    }
    double x0 = points[0].real(), x1 = x0, y0 = points[0].imag(), y1 = y0;
    for (const Complex& p : points) {
        x0 = std::min(x0, p.real());
        x1 = std::max(x1, p.real());
        y0 = std::min(y0, p.imag());
        y1 = std::max(y1, p.imag());
    }
    double w = x1 - x0;
    double h = y1 - y0;
    const double extent = std::max({w, h, 0.0});
    if (w <= 0.0) {
        w = extent > 0.0 ? extent : 1.0;
    }
    if (h <= 0.0) {
        h = extent > 0.0 ? extent : 1.0;
    }
    const double cx = 0.5 * (x0 + x1);
    const double cy = 0.5 * (y0 + y1);
    return {cx - w, cx + w, cy - h, cy + h};
}

FieldGrid velocity_grid(std::span<const Complex> points, std::span<const Complex> strengths, const Window& window,
                        std::size_t nx, std::size_t ny, double min_separation)
{
    check_sizes(points, strengths);
    if (nx < 2 || ny < 2) {
        throw std::invalid_argument("velocity_grid: nx and ny must be at least 2");
    }
    if (!(window.x_max > window.x_min) || !(window.y_max > window.y_min)) {
        throw std::invalid_argument("velocity_grid: empty window");
    }
    FieldGrid grid{window, nx, ny, {}};
    grid.samples.resize(nx * ny);
    const double dx = (window.x_max - window.x_min) / static_cast<double>(nx - 1);
    const double dy = (window.y_max - window.y_min) / static_cast<double>(ny - 1);
    for (std::size_t j = 0; j < ny; ++j) {
        const double y = j + 1 == ny ? window.y_max : window.y_min + dy * static_cast<double>(j);
        for (std::size_t i = 0; i < nx; ++i) {
            const double x = i + 1 == nx ? window.x_max : window.x_min + dx * static_cast<double>(i);
            GridSample& s = grid.samples[j * nx + i];
            s.position = {x, y};
            const double dist = nearest(points, s.position).second;
            if (dist < min_separation || dist == 0.0) {
                s.singular = true;
                continue;
            }
            s.velocity = raw_velocity(points, strengths, s.position);
            if (!std::isfinite(s.velocity.real()) || !std::isfinite(s.velocity.imag())) {
                s.velocity = {};
                s.singular = true;
            }
        }
    }
    return grid;
}

void write_grid_csv(std::ostream& os, const FieldGrid& grid)
{
    os << "x,y,u,v,singular\n";
    for (const GridSample& s : grid.samples) {
        os << format_g17(s.position.real()) << ',' << format_g17(s.position.imag()) << ','
           << format_g17(s.velocity.real()) << ',' << format_g17(s.velocity.imag()) << ',' << (s.singular ? 1 : 0)
           << '\n';
    }
}

std::string_view to_string(StreamlineEnd e) noexcept
{
    switch (e) {
    case StreamlineEnd::step_limit: return "step_limit";
    case StreamlineEnd::window_exit: return "window_exit";
    case StreamlineEnd::singularity_approach: return "singularity_approach";
    case StreamlineEnd::stagnation: return "stagnation";
    }
    return "step_limit";
}

Streamline trace_streamline(std::span<const Complex> points, std::span<const Complex> strengths, Complex start,
                            double step, std::size_t max_steps, const StreamlineOptions& options)
{
    check_sizes(points, strengths);
    if (!(step > 0.0) || !std::isfinite(step)) {
        throw std::invalid_argument("trace_streamline: step must be positive");
    }
    velocity_at(points, strengths, start, options.min_separation);

    Streamline line;
    line.vertices.push_back(start);
    if (options.window && !options.window->contains(start)) {
        line.terminated_by = StreamlineEnd::window_exit;
        return line;
    }

    // Unit direction, or nullopt at stagnation / singular points.
    auto direction = [&](Complex z) -> std::optional<Complex> {
        if (nearest(points, z).second < options.min_separation) {
            return std::nullopt;
        }
        const Complex v = raw_velocity(points, strengths, z);
        const double speed = std::abs(v);
        if (!(speed > options.stagnation_speed) || !std::isfinite(speed)) {
            return std::nullopt;
        }
        return v / speed;
    };

    Complex z = start;
    for (std::size_t k = 0; k < max_steps; ++k) {
        const auto k1 = direction(z);
        if (!k1) {
            line.terminated_by = StreamlineEnd::stagnation;
            return line;
        }
        const auto k2 = direction(z + 0.5 * step * *k1);
        const auto k3 = k2 ? direction(z + 0.5 * step * *k2) : std::nullopt;
        const auto k4 = k3 ? direction(z + step * *k3) : std::nullopt;
        if (!k2 || !k3 || !k4) {
            line.terminated_by = StreamlineEnd::singularity_approach;
            return line;
        }
        Complex next = z + (step / 6.0) * (*k1 + 2.0 * *k2 + 2.0 * *k3 + *k4);
        if (std::abs(next - z) > step) {
            next = z + step * (next - z) / std::abs(next - z);
        }
        if (nearest(points, next).second < step) {
            line.terminated_by = StreamlineEnd::singularity_approach;
            return line;
        }
        if (options.window && !options.window->contains(next)) {
            line.terminated_by = StreamlineEnd::window_exit;
            return line;
        }
        line.vertices.push_back(next);
        z = next;
    }
    line.terminated_by = StreamlineEnd::step_limit;
    return line;
}

FarFieldDeviation far_field_deviation(std::span<const Complex> points, std::span<const Complex> strengths,
                                      double radius, std::optional<Complex> anchor, double tol)
{
    check_sizes(points, strengths);
    if (points.empty()) {
        throw UndefinedFarField("far_field_deviation: no singularities");
    }
    Complex total;
    Complex moment;
    double scale = 0.0;
    for (std::size_t a = 0; a < points.size(); ++a) {
        total += strengths[a];
        moment += strengths[a] * points[a];
        scale = std::max(scale, std::abs(strengths[a]));
    }
    if (!(std::abs(total) > tol * scale)) {
        std::ostringstream os;
        os << "far_field_deviation: total strength " << std::abs(total) << " is negligible";
        throw UndefinedFarField(os.str());
    }
    double diameter = 0.0;
    for (std::size_t a = 0; a < points.size(); ++a) {
        for (std::size_t b = a + 1; b < points.size(); ++b) {
            diameter = std::max(diameter, std::abs(points[a] - points[b]));
        }
    }
    if (!(radius >= 3.0 * diameter) || !std::isfinite(radius) || !(radius > 0.0)) {
        throw std::invalid_argument("far_field_deviation: radius must be at least three configuration diameters");
    }

    FarFieldDeviation out;
    out.total_strength = total;
    out.anchor = anchor.value_or(moment / total);
    const Complex single[] = {out.anchor};
    const Complex single_strength[] = {total};

    auto deviation = [&](double r) {
        double worst = 0.0;
        for (std::size_t k = 0; k < kFarFieldAngles; ++k) {
            const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / kFarFieldAngles;
            const Complex z = out.anchor + std::polar(r, angle);
            const Complex diff = raw_velocity(points, strengths, z) - raw_velocity(single, single_strength, z);
            worst = std::max(worst, std::abs(diff));
        }
        return worst;
    };

    out.deviation_r = deviation(radius);
    out.deviation_2r = deviation(2.0 * radius);
    out.scaled_r = out.deviation_r * radius * radius;
    out.ratio = out.deviation_2r > 0.0 ? out.deviation_r / out.deviation_2r : std::numeric_limits<double>::infinity();
    out.exponent = std::log2(out.ratio);
    return out;
}

}  // namespace singeq
