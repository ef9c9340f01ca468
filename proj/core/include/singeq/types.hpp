#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace singeq {

using Complex = std::complex<double>;

/// Minimum admissible distance between two singularities.
inline constexpr double kDefaultMinSeparation = 1e-9;

/// Strengths Γ_1..Γ_N; real part is circulation, imaginary part source strength.
using StrengthVector = std::vector<Complex>;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two points closer than the minimum separation (or otherwise unusable).
class DegenerateConfiguration : public Error {
public:
    DegenerateConfiguration(const std::string& what, std::size_t first, std::size_t second)
        : Error(what), first_(first), second_(second) {}
    explicit DegenerateConfiguration(const std::string& what)
        : Error(what) {}

    std::size_t first() const noexcept { return first_; }
    std::size_t second() const noexcept { return second_; }

private:
    std::size_t first_ = 0;
    std::size_t second_ = 0;
};

class ConvergenceFailure : public Error {
public:
    using Error::Error;
};

class OddDimension : public Error {
public:
    using Error::Error;
};

class ZeroStrengths : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

// ---------------------------------------------------------------------------
// PointSet
// ---------------------------------------------------------------------------

/// Ordered configuration z_1..z_N of pairwise distinct, finite points.
class PointSet {
public:
    /// Throws DegenerateConfiguration when N < 2, a coordinate is not finite,
    /// or two points lie closer than `min_separation`.
    explicit PointSet(std::vector<Complex> points,
                      double min_separation = kDefaultMinSeparation);

    std::size_t size() const noexcept { return points_.size(); }
    const Complex& operator[](std::size_t i) const { return points_[i]; }
    std::span<const Complex> points() const noexcept { return points_; }
    double min_separation() const noexcept { return min_separation_; }

    auto begin() const noexcept { return points_.begin(); }
    auto end() const noexcept { return points_.end(); }

    /// Applies z -> scale * z + shift to every point.
    PointSet transformed(Complex scale, Complex shift) const;

private:
    std::vector<Complex> points_;
    double min_separation_;
};

/// Smallest pairwise distance together with the offending indices.
struct ClosestPair {
    double distance;
    std::size_t first;
    std::size_t second;
};

/// Brute-force closest pair; requires at least two points.
ClosestPair closest_pair(std::span<const Complex> points);

bool all_finite(std::span<const Complex> values) noexcept;

double norm2(std::span<const Complex> values) noexcept;

}  // namespace singeq
