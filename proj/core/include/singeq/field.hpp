#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "singeq/types.hpp"

namespace singeq {

class SingularPoint : public Error {
public:
    SingularPoint(const std::string& what, std::size_t index) : Error(what), index_(index) {}
    /// Index of the singularity that is too close.
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

class UndefinedFarField : public Error {
public:
    using Error::Error;
};

/// Physical velocity conj((1/2πi) Σ Γ_b / (z − z_b)) at a point off the singularities.
Complex velocity_at(std::span<const Complex> points, std::span<const Complex> strengths, Complex z,
                    double min_separation = kDefaultMinSeparation);

struct Window {
    double x_min = -1.0;
    double x_max = 1.0;
    double y_min = -1.0;
    double y_max = 1.0;

    bool contains(Complex z) const noexcept
    {
        return z.real() >= x_min && z.real() <= x_max && z.imag() >= y_min && z.imag() <= y_max;
    }
};

/// Bounding box of the points padded by half its extent on every side.
Window default_window(std::span<const Complex> points);

struct GridSample {
    Complex position;
    Complex velocity;
    bool singular = false;
};

struct FieldGrid {
    Window window;
    std::size_t nx = 0;
    std::size_t ny = 0;
    /// Row-major with y outer: samples[j * nx + i] sits at (x_i, y_j).
    std::vector<GridSample> samples;

    const GridSample& at(std::size_t i, std::size_t j) const { return samples[j * nx + i]; }
};

/// Samples the field on an nx × ny lattice spanning the window (edges included).
/// Nodes within min_separation of a singularity are flagged with zero velocity.
FieldGrid velocity_grid(std::span<const Complex> points, std::span<const Complex> strengths, const Window& window,
                        std::size_t nx, std::size_t ny, double min_separation = kDefaultMinSeparation);

/// CSV with header x,y,u,v,singular and %.17g numbers.
void write_grid_csv(std::ostream& os, const FieldGrid& grid);

enum class StreamlineEnd { step_limit, window_exit, singularity_approach, stagnation };

std::string_view to_string(StreamlineEnd e) noexcept;

struct Streamline {
    std::vector<Complex> vertices;
    StreamlineEnd terminated_by = StreamlineEnd::step_limit;
};

struct StreamlineOptions {
    std::optional<Window> window;
    /// Speeds below this count as a stagnation point.
    double stagnation_speed = 1e-12;
    double min_separation = kDefaultMinSeparation;
};

/// RK4 advection along the unit-speed direction field, so `step` is the arclength
/// per step. Stops at the step limit, on leaving the window, when the next
/// vertex would fall within one step of a singularity, or at a stagnation point.
Streamline trace_streamline(std::span<const Complex> points, std::span<const Complex> strengths, Complex start,
                            double step, std::size_t max_steps, const StreamlineOptions& options = {});

struct FarFieldDeviation {
    Complex total_strength;
    Complex anchor;
    /// max over sampled angles of |v_config − v_single| on the circle |z − anchor| = R.
    double deviation_r = 0.0;
    double deviation_2r = 0.0;
    /// deviation_r · R², the scaled dipole-order residual.
    double scaled_r = 0.0;
    double ratio = 0.0;
    /// log2(ratio); 2 for the generic O(1/|z|²) decay.
    double exponent = 0.0;
};

inline constexpr std::size_t kFarFieldAngles = 64;

/// Compares the field with a single singularity of strength ΣΓ placed at
/// `anchor` (the center of vorticity when absent) at radii R and 2R.
/// Throws UndefinedFarField when |ΣΓ| ≤ tol · max|Γ|, and invalid_argument
/// when R is below three configuration diameters.
FarFieldDeviation far_field_deviation(std::span<const Complex> points, std::span<const Complex> strengths,
                                      double radius, std::optional<Complex> anchor = std::nullopt,
                                      double tol = 1e-6);

}  // namespace singeq
