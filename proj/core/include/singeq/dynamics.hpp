#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "singeq/types.hpp"

namespace singeq {

/// Pair distance record emitted during integration.
struct ProximityEvent {
    double time = 0.0;
    std::size_t first = 0;
    std::size_t second = 0;
    double distance = 0.0;
    bool fatal = false;
};

struct TrajectorySet {
    std::vector<double> times;
    /// positions[k][a] = z_a(times[k]).
    std::vector<std::vector<Complex>> positions;
    std::vector<ProximityEvent> events;
};

class CollisionAbort : public Error {
public:
    CollisionAbort(const std::string& what, ProximityEvent event, TrajectorySet partial)
        : Error(what), event_(event), partial_(std::move(partial)) {}
    const ProximityEvent& event() const noexcept { return event_; }
    const TrajectorySet& partial() const noexcept { return partial_; }

private:
    ProximityEvent event_;
    TrajectorySet partial_;
};

class CollapseReached : public Error {
public:
    using Error::Error;
};

/// Velocities ż_a = conj((1/2πi) Σ_{b≠a} Γ_b / (z_a − z_b)).
std::vector<Complex> induced_velocities(std::span<const Complex> positions, std::span<const Complex> strengths);

struct IntegrationOptions {
    /// Fatal pair distance; a warning event is recorded below 10x this value.
    double min_separation = kDefaultMinSeparation;
    /// Keep every k-th step in the returned trajectory (the last step is always kept).
    std::size_t record_stride = 1;
};

/// Fixed-step classical RK4 on the N-body system up to t_final.
///
/// Throws CollisionAbort (carrying the trajectory so far) when a pair comes
/// closer than min_separation, when a step moves a particle further than the
/// current minimum pair distance, or when the state stops being finite.
TrajectorySet integrate(std::span<const Complex> positions, std::span<const Complex> strengths, double t_final,
                        double dt, const IntegrationOptions& options = {});

TrajectorySet integrate(const PointSet& points, std::span<const Complex> strengths, double t_final, double dt,
                        const IntegrationOptions& options = {});

/// max over a, t of |z_a(t) − z_a(0)| along the RK4 trajectory.
double fixedness_check(std::span<const Complex> positions, std::span<const Complex> strengths,
                       double t_final = 1.0, double dt = 1e-3, const IntegrationOptions& options = {});

double fixedness_check(const PointSet& points, std::span<const Complex> strengths, double t_final = 1.0,
                       double dt = 1e-3, const IntegrationOptions& options = {});

// ---------------------------------------------------------------------------
// Single singularity orbit
// ---------------------------------------------------------------------------

struct OrbitParams {
    Complex gamma;
    double r0 = 1.0;
    double theta0 = 0.0;
};

struct OrbitState {
    double r = 0.0;
    double theta = 0.0;
};

/// π r0² / (−Γ_i) for a sink, +∞ otherwise.
double collapse_time(const OrbitParams& p);

/// Closed-form solution of ṙ = Γ_i/(2πr), θ̇ = Γ_r/(2πr²):
///   r² = r0² + Γ_i t / π
///   θ  = θ0 + (Γ_r / (2Γ_i)) ln(1 + Γ_i t / (π r0²))   (Γ_i ≠ 0)
///   θ  = θ0 + Γ_r t / (2π r0²)                        (Γ_i = 0)
/// Throws CollapseReached for t at or past the collapse time of a sink.
OrbitState single_orbit(const OrbitParams& p, double t);

/// RK4 integration of the same polar ODEs with `steps` equal steps.
OrbitState integrate_orbit(const OrbitParams& p, double t, std::size_t steps);

}  // namespace singeq
