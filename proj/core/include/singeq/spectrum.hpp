#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "singeq/matrix.hpp"
#include "singeq/types.hpp"

namespace singeq {

class EmptySpectrum : public Error {
public:
    using Error::Error;
};

class InvalidDistribution : public Error {
public:
    using Error::Error;
};

/// How nonzero singular values are turned into a distribution.
///   power:  σ_i² / Σ σ_j²   (reproduces the published spectral tables)
///   linear: σ_i  / Σ σ_j
enum class NormalizationMode { power, linear };

std::string_view to_string(NormalizationMode mode) noexcept;
std::optional<NormalizationMode> parse_normalization_mode(std::string_view text) noexcept;

/// Normalizes the strictly positive entries of `sigma` (zeros are dropped).
/// Throws EmptySpectrum if none are positive.
std::vector<double> normalize_spectrum(std::span<const double> sigma,
                                       NormalizationMode mode = NormalizationMode::power);

/// S = −Σ p ln p. Entries must be positive and sum to 1 within 1e-9.
double shannon_entropy(std::span<const double> distribution);

struct SpectralReport {
    std::vector<double> sigma_raw;          ///< all N, descending
    std::vector<double> sigma_normalized;   ///< the k nonzero values, descending
    double entropy = 0.0;                   ///< nats
    double spectral_gap_raw = 0.0;          ///< smallest nonzero σ
    double spectral_gap_normalized = 0.0;
    std::size_t rank = 0;
    double threshold_used = 0.0;
    NormalizationMode mode = NormalizationMode::power;
};

/// SVD, rank threshold (same rule as nullspace), normalization, entropy, gap.
SpectralReport spectral_report(const ComplexMatrix& a,
                               NormalizationMode mode = NormalizationMode::power,
                               double rel_tol = 1e-10);

}  // namespace singeq
