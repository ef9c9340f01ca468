#include "singeq/spectrum.hpp"

#include <cmath>
#include <numeric>

#include "singeq/linalg.hpp"

namespace singeq {

std::string_view to_string(NormalizationMode mode) noexcept
{
    return mode == NormalizationMode::power ? "power" : "linear";
}

std::optional<NormalizationMode> parse_normalization_mode(std::string_view text) noexcept
{
    if (text == "power") {
        return NormalizationMode::power;
    }
    if (text == "linear") {
        return NormalizationMode::linear;
    }
    return std::nullopt;
}

std::vector<double> normalize_spectrum(std::span<const double> sigma, NormalizationMode mode)
{
    std::vector<double> weights;
    weights.reserve(sigma.size());
    for (double s : sigma) {
        if (s > 0.0) {
            weights.push_back(mode == NormalizationMode::power ? s * s : s);
        }
    }
    if (weights.empty()) {
        throw EmptySpectrum("normalize_spectrum: no nonzero singular values");
    }
    const double sum = std::accumulate(weights.begin(), weights.end(), 0.0);
    for (double& w : weights) {
        w /= sum;
    }
    return weights;
}

double shannon_entropy(std::span<const double> distribution)
{
    if (distribution.empty()) {
        throw InvalidDistribution("shannon_entropy: empty distribution");
    }
    double sum = 0.0;
    for (double p : distribution) {
        if (!(p > 0.0) || !std::isfinite(p)) {
            throw InvalidDistribution("shannon_entropy: entries must be positive and finite");
        }
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
        throw InvalidDistribution("shannon_entropy: entries must sum to one");
    }
    double s = 0.0;
    for (double p : distribution) {
        s -= p * std::log(p);
    }
    return s;
}

SpectralReport spectral_report(const ComplexMatrix& a, NormalizationMode mode, double rel_tol)
{
    const SvdResult decomposition = svd(a);
    const RankReport rank = rank_report(decomposition, rel_tol);

    SpectralReport report;
    report.sigma_raw = decomposition.sigma;
    report.rank = rank.rank;
    report.threshold_used = rank.threshold_used;
    report.mode = mode;

    const std::span<const double> nonzero(report.sigma_raw.data(), rank.rank);
    report.sigma_normalized = normalize_spectrum(nonzero, mode);
    report.entropy = shannon_entropy(report.sigma_normalized);
    report.spectral_gap_raw = nonzero.back();
    report.spectral_gap_normalized = report.sigma_normalized.back();
    return report;
}

}  // namespace singeq
