#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "singeq/types.hpp"

namespace singeq::cli {

/// Malformed or unreadable input file.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ConfigurationFile {
    std::vector<Complex> points;
    std::optional<StrengthVector> strengths;
    nlohmann::json metadata = nlohmann::json::object();
};

/// Accepts any JSON object with `points` ([[x, y], ...]) and optional
/// `strengths` ([[re, im], ...]) and `metadata`; other keys are ignored, so a
/// solve report is itself a valid configuration.
ConfigurationFile parse_configuration(const nlohmann::json& tree);
ConfigurationFile read_configuration(const std::filesystem::path& path);

nlohmann::json to_json(const ConfigurationFile& file);
nlohmann::json complex_pair(Complex z);
nlohmann::json complex_list(std::span<const Complex> values);

/// Two-space indented JSON with floats at 17 significant digits and a
/// trailing newline. Object keys come out sorted.
void write_json(std::ostream& os, const nlohmann::json& tree);

}  // namespace singeq::cli
