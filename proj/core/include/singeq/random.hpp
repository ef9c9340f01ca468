#pragma once

#include <cstdint>
#include <random>

namespace singeq {

/// SplitMix64 finalizer; used to derive independent stream seeds.
std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Portable seeded generator.
///
/// The engine is std::mt19937_64 (its output sequence is fixed by the C++
/// standard) seeded with splitmix64(seed ^ splitmix64(stream)). Doubles are
/// formed as (x >> 11) · 2^-53 rather than through std::uniform_real_distribution,
/// whose algorithm differs between standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

    std::uint64_t next_u64() { return engine_(); }
    /// Uniform on [0, 1).
    double uniform();
    /// Uniform on [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Independent generator for a sub-task (e.g. a retry attempt).
    Rng split(std::uint64_t stream) const { return Rng(seed_, stream_ * 0x9E3779B97F4A7C15ULL + stream + 1); }

private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::mt19937_64 engine_;
};

}  // namespace singeq
