#include "singeq/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace singeq {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
const Complex kTwoPiI{0.0, kTwoPi};

void check_inputs(std::span<const Complex> positions, std::span<const Complex> strengths)
{
    if (positions.size() != strengths.size()) {
        throw DimensionMismatch("dynamics: strengths do not match positions");
    }
    if (!all_finite(positions) || !all_finite(strengths)) {
        throw std::invalid_argument("dynamics: non-finite input");
    }
}

ClosestPair closest_or_none(std::span<const Complex> z)
{
    if (z.size() < 2) {
        return {std::numeric_limits<double>::infinity(), 0, 0};
    }
    return closest_pair(z);
}

}  // namespace

std::vector<Complex> induced_velocities(std::span<const Complex> positions, std::span<const Complex> strengths)
{
    const std::size_t n = positions.size();
    std::vector<Complex> sum(n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            const Complex inv = 1.0 / (positions[a] - positions[b]);
            sum[a] += strengths[b] * inv;
            sum[b] -= strengths[a] * inv;
        }
    }
    for (Complex& v : sum) {
        v = std::conj(v / kTwoPiI);
    }
    return sum;
}

TrajectorySet integrate(std::span<const Complex> positions, std::span<const Complex> strengths, double t_final,
                        double dt, const IntegrationOptions& options)
{
    check_inputs(positions, strengths);
    if (!(t_final > 0.0) || !(dt > 0.0) || !std::isfinite(t_final) || !std::isfinite(dt)) {
        throw std::invalid_argument("integrate: t_final and dt must be positive");
    }
    const std::size_t stride = std::max<std::size_t>(1, options.record_stride);
    const std::size_t n = positions.size();
    const auto steps = static_cast<std::size_t>(std::ceil(t_final / dt - 1e-9));

    TrajectorySet out;
    std::vector<Complex> z(positions.begin(), positions.end());
    out.times.push_back(0.0);
    out.positions.push_back(z);

    auto abort = [&](const std::string& why, ProximityEvent event) {
        event.fatal = true;
        out.events.push_back(event);
        std::ostringstream os;
        os << "integrate: " << why << " between " << event.first << " and " << event.second << " at t = "
           << event.time << " (distance " << event.distance << ")";
        throw CollisionAbort(os.str(), event, out);
    };

    std::vector<Complex> stage(n);
    auto add_scaled = [&](const std::vector<Complex>& k, double h) {
        for (std::size_t a = 0; a < n; ++a) {
            stage[a] = z[a] + h * k[a];
        }
        return stage;
    };

    double t = 0.0;
    for (std::size_t step = 1; step <= steps; ++step) {
        const double t_next = step == steps ? t_final : static_cast<double>(step) * dt;
        const double h = t_next - t;
        const ClosestPair before = closest_or_none(z);

        const std::vector<Complex> k1 = induced_velocities(z, strengths);
        const std::vector<Complex> k2 = induced_velocities(add_scaled(k1, 0.5 * h), strengths);
        const std::vector<Complex> k3 = induced_velocities(add_scaled(k2, 0.5 * h), strengths);
        const std::vector<Complex> k4 = induced_velocities(add_scaled(k3, h), strengths);

        double max_move = 0.0;
        std::vector<Complex> next(n);
        for (std::size_t a = 0; a < n; ++a) {
            const Complex delta = (h / 6.0) * (k1[a] + 2.0 * k2[a] + 2.0 * k3[a] + k4[a]);
            next[a] = z[a] + delta;
            max_move = std::max(max_move, std::abs(delta));
        }
        if (!all_finite(next) || !(max_move <= before.distance)) {
            abort("step cannot resolve the approach", {t_next, before.first, before.second, before.distance, true});
        }
        z = std::move(next);
        t = t_next;

        const ClosestPair after = closest_or_none(z);
        if (after.distance < options.min_separation) {
            abort("collision", {t, after.first, after.second, after.distance, true});
        }
        if (after.distance < 10.0 * options.min_separation) {
            out.events.push_back({t, after.first, after.second, after.distance, false});
        }
        if (step % stride == 0 || step == steps) {
            out.times.push_back(t);
            out.positions.push_back(z);
        }
    }
    return out;
}

TrajectorySet integrate(const PointSet& points, std::span<const Complex> strengths, double t_final, double dt,
                        const IntegrationOptions& options)
{
    return integrate(points.points(), strengths, t_final, dt, options);
}

double fixedness_check(std::span<const Complex> positions, std::span<const Complex> strengths, double t_final,
                       double dt, const IntegrationOptions& options)
{
    const TrajectorySet traj = integrate(positions, strengths, t_final, dt, options);
    double drift = 0.0;
    for (const auto& snapshot : traj.positions) {
        for (std::size_t a = 0; a < snapshot.size(); ++a) {
            drift = std::max(drift, std::abs(snapshot[a] - positions[a]));
        }
    }
    return drift;
}

double fixedness_check(const PointSet& points, std::span<const Complex> strengths, double t_final, double dt,
                       const IntegrationOptions& options)
{
    return fixedness_check(points.points(), strengths, t_final, dt, options);
}

double collapse_time(const OrbitParams& p)
{
    if (p.gamma.imag() < 0.0) {
        return std::numbers::pi * p.r0 * p.r0 / -p.gamma.imag();
    }
    return std::numeric_limits<double>::infinity();
}

OrbitState single_orbit(const OrbitParams& p, double t)
{
    if (!(p.r0 > 0.0)) {
        throw std::invalid_argument("single_orbit: r0 must be positive");
    }
    if (!(t >= 0.0)) {
        throw std::invalid_argument("single_orbit: t must be non-negative");
    }
    if (t >= collapse_time(p)) {
        std::ostringstream os;
        os << "single_orbit: sink reaches the origin at t = " << collapse_time(p);
        throw CollapseReached(os.str());
    }
    const double gr = p.gamma.real();
    const double gi = p.gamma.imag();
    const double r0sq = p.r0 * p.r0;
    OrbitState s;
    s.r = std::sqrt(r0sq + gi * t / std::numbers::pi);
    if (gi == 0.0) {
        s.theta = p.theta0 + gr * t / (kTwoPi * r0sq);
    } else {
        s.theta = p.theta0 + gr / (2.0 * gi) * std::log1p(gi * t / (std::numbers::pi * r0sq));
    }
    return s;
}

OrbitState integrate_orbit(const OrbitParams& p, double t, std::size_t steps)
{
    if (!(p.r0 > 0.0) || steps == 0) {
        throw std::invalid_argument("integrate_orbit: r0 must be positive and steps nonzero");
    }
    if (t >= collapse_time(p)) {
        throw CollapseReached("integrate_orbit: sink reaches the origin");
    }
    const double gr = p.gamma.real();
    const double gi = p.gamma.imag();
    auto rhs = [&](const OrbitState& s) {
        return OrbitState{gi / (kTwoPi * s.r), gr / (kTwoPi * s.r * s.r)};
    };
    auto shifted = [](const OrbitState& s, const OrbitState& k, double h) {
        return OrbitState{s.r + h * k.r, s.theta + h * k.theta};
    };
    OrbitState s{p.r0, p.theta0};
    const double h = t / static_cast<double>(steps);
    for (std::size_t i = 0; i < steps; ++i) {
        const OrbitState k1 = rhs(s);
        const OrbitState k2 = rhs(shifted(s, k1, 0.5 * h));
        const OrbitState k3 = rhs(shifted(s, k2, 0.5 * h));
        const OrbitState k4 = rhs(shifted(s, k3, h));
        s.r += h / 6.0 * (k1.r + 2.0 * k2.r + 2.0 * k3.r + k4.r);
        s.theta += h / 6.0 * (k1.theta + 2.0 * k2.theta + 2.0 * k3.theta + k4.theta);
    }
    return s;
}

}  // namespace singeq
