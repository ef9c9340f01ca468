#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "singeq/cli/files.hpp"
#include "singeq/field.hpp"
#include "singeq/generators.hpp"
#include "singeq/spectrum.hpp"

namespace singeq::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_usage = 2,
    exit_generation = 3,
    exit_no_equilibrium = 4,
    exit_tolerance = 5,
    exit_collision = 6,
};

/// No path means the command's stdout stream.
using OutPath = std::optional<std::filesystem::path>;

enum class Placement { line, circle, curve, plane };

struct GenerateOptions {
    Placement placement = Placement::line;
    std::size_t n = 0;
    Distribution distribution = Distribution::even_parameter;
    std::uint64_t seed = 0;
    PolarCurve curve = PolarCurve::flower;
    /// [[theta, r], ...] samples for the custom curve.
    std::optional<std::filesystem::path> curve_samples;
    double radius = 1.0;
    double phase = 0.0;
    Window region{-1.0, 1.0, -1.0, 1.0};
    double min_separation = kDefaultMinSeparation;
    OutPath out;
};

struct SolveCommand {
    std::filesystem::path input;
    double tol = 1e-10;
    NormalizationMode mode = NormalizationMode::power;
    OutPath out;
};

struct VerifyCommand {
    std::filesystem::path input;
    double t_final = 1.0;
    double dt = 1e-3;
    /// Bound on both the drift and the relative residual ‖AΓ‖/‖Γ‖.
    double tol = 1e-6;
    double min_separation = kDefaultMinSeparation;
    OutPath out;
};

struct FieldCommand {
    std::filesystem::path input;
    std::optional<Window> window;
    std::size_t nx = 41;
    std::size_t ny = 41;
    bool ortho = false;
    /// Rank tolerance used when the input carries no strengths.
    double tol = 1e-10;
    double min_separation = kDefaultMinSeparation;
    OutPath out;
};

struct SpectrumCommand {
    std::filesystem::path input;
    double tol = 1e-10;
    NormalizationMode mode = NormalizationMode::power;
    OutPath out;
};

struct OrbitCommand {
    Complex gamma{1.0, 0.0};
    double r0 = 1.0;
    double theta0 = 0.0;
    double t_final = 1.0;
    std::size_t rows = 10;
    std::size_t steps = 1000;
    /// Largest allowed |analytic − numeric| in r and θ.
    double tol = 1e-6;
    OutPath out;
};

/// Full ReportFile tree for a configuration: the solved configuration
/// (points, strengths, metadata) plus solution, spectrum and classification.
nlohmann::json make_report(const ConfigurationFile& input, double rel_tol, NormalizationMode mode);

int cmd_generate(const GenerateOptions& options, std::ostream& out, std::ostream& err);
int cmd_solve(const SolveCommand& options, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyCommand& options, std::ostream& out, std::ostream& err);
int cmd_field(const FieldCommand& options, std::ostream& out, std::ostream& err);
int cmd_spectrum(const SpectrumCommand& options, std::ostream& out, std::ostream& err);
int cmd_orbit(const OrbitCommand& options, std::ostream& out, std::ostream& err);

/// Parses `args` (without the program name) and dispatches to a command.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace singeq::cli
