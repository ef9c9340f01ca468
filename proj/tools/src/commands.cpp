#include "singeq/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <ostream>
#include <string>

#include "singeq/configuration.hpp"
#include "singeq/dynamics.hpp"
#include "singeq/equilibrium.hpp"

namespace singeq::cli {

namespace {

using nlohmann::json;

std::string fixed4(double x)
{
    if (std::abs(x) < 5e-5) {
        x = 0.0;
    }
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.4f", x);
    return buf;
}

std::string sci4(double x)
{
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.4e", x);
    return buf;
}

std::string complex4(Complex z)
{
    std::string im = fixed4(std::abs(z.imag()));
    const bool negative = z.imag() < 0.0 && im != "0.0000";
    return fixed4(z.real()) + (negative ? " - " : " + ") + im + "i";
}

std::string pad(const std::string& text, std::size_t width)
{
    return text.size() >= width ? text : std::string(width - text.size(), ' ') + text;
}

template <class Body>
int write_output(const OutPath& path, std::ostream& out, std::ostream& err, Body&& body)
{
    if (!path) {
        body(out);
        return exit_ok;
    }
    std::ofstream file(*path, std::ios::binary | std::ios::trunc);
    if (!file) {
        err << "cannot write " << path->string() << '\n';
        return exit_usage;
    }
    body(file);
    file.flush();
    if (!file) {
        err << "error writing " << path->string() << '\n';
        return exit_usage;
    }
    return exit_ok;
}

int write_text(const OutPath& path, std::ostream& out, std::ostream& err, const std::string& text)
{
    return write_output(path, out, err, [&](std::ostream& os) { os << text; });
}

/// Maps library and input errors onto exit codes for the file-based commands.
template <class Body>
int guarded(const char* command, std::ostream& err, Body&& body)
{
    try {
        return body();
    } catch (const InputError& e) {
        err << command << ": " << e.what() << '\n';
        return exit_usage;
    } catch (const NoEquilibrium& e) {
        err << command << ": no equilibrium: " << e.what() << '\n';
        err << command << ": singular values";
        for (double s : e.singular_values()) {
            err << ' ' << sci4(s);
        }
        err << '\n';
        return exit_no_equilibrium;
    } catch (const CollisionAbort& e) {
        const ProximityEvent& ev = e.event();
        err << command << ": collision between " << ev.first << " and " << ev.second << " at t = " << fixed4(ev.time)
            << " (distance " << sci4(ev.distance) << ")\n";
        return exit_collision;
    } catch (const DegenerateConfiguration& e) {
        err << command << ": " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        err << command << ": " << e.what() << '\n';
        return exit_usage;
    } catch (const Error& e) {
        err << command << ": " << e.what() << '\n';
        return exit_usage;
    }
}

std::vector<PolarSample> read_curve_samples(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot open " + path.string());
    }
    json tree;
    try {
        tree = json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError(path.string() + ": " + e.what());
    }
    if (!tree.is_array()) {
        throw InputError("curve samples must be a list of [theta, r] pairs");
    }
    std::vector<PolarSample> samples;
    for (const json& item : tree) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_number() || !item[1].is_number()) {
            throw InputError("curve samples must be a list of [theta, r] pairs");
        }
        samples.push_back({item[0].get<double>(), item[1].get<double>()});
    }
    return samples;
}

std::string_view to_string(Placement p)
{
    switch (p) {
    case Placement::line: return "line";
    case Placement::circle: return "circle";
    case Placement::curve: return "curve";
    case Placement::plane: return "plane";
    }
    return "line";
}

StrengthVector strengths_or_solve(const ConfigurationFile& file, const PointSet& points, double rel_tol)
{
    if (file.strengths) {
        return *file.strengths;
    }
    SolveOptions options;
    options.rel_tol = rel_tol;
    return solve_strengths(points, options).strengths;
}

}  // namespace

nlohmann::json make_report(const ConfigurationFile& input, double rel_tol, NormalizationMode mode)
{
    const PointSet points(input.points);
    SolveOptions options;
    options.rel_tol = rel_tol;
    const EquilibriumSolution sol = solve_strengths(points, options);
    const SpectralReport spec = spectral_report(build_matrix(points), mode, rel_tol);
    const FarFieldClass far = classify_far_field(sol.strengths);
    const CenterOfVorticity cov = center_of_vorticity(points, sol.strengths);

    json report = json::object();
    report["points"] = complex_list(input.points);
    report["strengths"] = complex_list(sol.strengths);
    report["metadata"] = input.metadata;

    json basis = json::array();
    for (const auto& v : sol.basis) {
        basis.push_back(complex_list(v));
    }
    report["solution"] = {
        {"strengths", complex_list(sol.strengths)},
        {"residual", sol.residual},
        {"nullity", sol.nullity},
        {"zero_eigenvalue_multiplicity", sol.zero_eigenvalue_multiplicity},
        {"threshold", sol.threshold_used},
        {"basis", basis},
    };
    report["spectrum"] = {
        {"mode", std::string(to_string(spec.mode))},
        {"sigma_raw", spec.sigma_raw},
        {"sigma_normalized", spec.sigma_normalized},
        {"entropy", spec.entropy},
        {"spectral_gap_raw", spec.spectral_gap_raw},
        {"spectral_gap_normalized", spec.spectral_gap_normalized},
        {"rank", spec.rank},
    };

    json kinds = json::array();
    for (const Complex& g : sol.strengths) {
        kinds.push_back(std::string(to_string(classify_singularity(g))));
    }
    json center = {
        {"defined", cov.defined},
        {"value", cov.defined ? complex_pair(cov.value) : json(nullptr)},
        {"first_moment", complex_pair(cov.first_moment)},
    };
    report["classification"] = {
        {"singularities", kinds},
        {"far_field", std::string(to_string(far.kind))},
        {"total_strength", complex_pair(far.total_strength)},
        {"center_of_vorticity", center},
    };
    return report;
}

int cmd_generate(const GenerateOptions& o, std::ostream& out, std::ostream& err)
{
    if (o.n < 2) {
        err << "generate: --n must be at least 2\n";
        return exit_usage;
    }
    json meta = {
        {"generator", std::string(to_string(o.placement))},
        {"n", o.n},
        {"seed", o.seed},
    };
    ConfigurationFile file;
    try {
        std::optional<PointSet> points;
        switch (o.placement) {
        case Placement::line:
            meta["distribution"] = std::string(to_string(o.distribution));
            points.emplace(generate_collinear(o.n, o.distribution, o.seed, o.min_separation));
            break;
        case Placement::circle:
            meta["distribution"] = std::string(to_string(o.distribution));
            meta["radius"] = o.radius;
            meta["phase"] = o.phase;
            points.emplace(generate_circle(o.n, o.distribution, o.radius, o.phase, o.seed, o.min_separation));
            break;
        case Placement::curve: {
            CurveSpec spec{o.curve, o.distribution, o.phase, {}};
            if (o.curve == PolarCurve::custom) {
                if (!o.curve_samples) {
                    err << "generate: the custom curve needs --samples\n";
                    return exit_usage;
                }
                spec.samples = read_curve_samples(*o.curve_samples);
            }
            meta["distribution"] = std::string(to_string(o.distribution));
            meta["curve"] = std::string(to_string(o.curve));
            meta["phase"] = o.phase;
            points.emplace(generate_polar_curve(spec, o.n, o.seed, o.min_separation));
            break;
        }
        case Placement::plane: {
            const RegionSpec region{o.region.x_min, o.region.x_max, o.region.y_min, o.region.y_max, o.seed};
            meta["region"] = {o.region.x_min, o.region.x_max, o.region.y_min, o.region.y_max};
            points.emplace(generate_random_plane(o.n, region, o.min_separation));
            break;
        }
        }
        const auto span = points->points();
        file.points.assign(span.begin(), span.end());
    } catch (const InputError& e) {
        err << "generate: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        err << "generate: " << e.what() << '\n';
        return exit_generation;
    }
    file.metadata = std::move(meta);
    return write_output(o.out, out, err, [&](std::ostream& os) { write_json(os, to_json(file)); });
}

int cmd_solve(const SolveCommand& o, std::ostream& out, std::ostream& err)
{
    return guarded("solve", err, [&]() -> int {
        const ConfigurationFile input = read_configuration(o.input);
        const json report = make_report(input, o.tol, o.mode);
        const int code = write_output(o.out, out, err, [&](std::ostream& os) { write_json(os, report); });
        if (code != exit_ok || !o.out) {
            return code;
        }
        const json& solution = report["solution"];
        const json& classification = report["classification"];
        out << "N = " << input.points.size() << "  nullity " << solution["nullity"].get<std::size_t>()
            << "  residual " << sci4(solution["residual"].get<double>()) << '\n';
        const json& strengths = report["strengths"];
        for (std::size_t k = 0; k < strengths.size(); ++k) {
            const Complex g{strengths[k][0].get<double>(), strengths[k][1].get<double>()};
            out << pad(std::to_string(k + 1), 4) << "  " << pad(complex4(g), 22) << "  "
                << classification["singularities"][k].get<std::string>() << '\n';
        }
        out << "entropy " << fixed4(report["spectrum"]["entropy"].get<double>()) << "  far field "
            << classification["far_field"].get<std::string>() << '\n';
        return exit_ok;
    });
}

int cmd_verify(const VerifyCommand& o, std::ostream& out, std::ostream& err)
{
    return guarded("verify", err, [&]() -> int {
        const ConfigurationFile input = read_configuration(o.input);
        if (!input.strengths) {
            err << "verify: input has no strengths\n";
            return exit_usage;
        }
        const PointSet points(input.points);
        const std::span<const Complex> strengths = *input.strengths;
        if (norm2(strengths) == 0.0) {
            err << "verify: all strengths are zero\n";
            return exit_usage;
        }
        const double res = residual(build_matrix(points), strengths);
        IntegrationOptions options;
        options.min_separation = o.min_separation;
        const double drift = fixedness_check(points, strengths, o.t_final, o.dt, options);
        const bool ok = drift <= o.tol && res <= o.tol;
        std::ostringstream text;
        text << "max drift  " << sci4(drift) << '\n';
        text << "residual   " << sci4(res) << '\n';
        text << "tolerance  " << sci4(o.tol) << '\n';
        text << (ok ? "status     ok\n" : "status     over tolerance\n");
        const int code = write_text(o.out, out, err, text.str());
        return code != exit_ok ? code : ok ? exit_ok : exit_tolerance;
    });
}

int cmd_field(const FieldCommand& o, std::ostream& out, std::ostream& err)
{
    return guarded("field", err, [&]() -> int {
        const ConfigurationFile input = read_configuration(o.input);
        const PointSet points(input.points);
        StrengthVector strengths = strengths_or_solve(input, points, o.tol);
        if (o.ortho) {
            for (Complex& g : strengths) {
                g *= Complex{0.0, 1.0};
            }
        }
        const Window window = o.window.value_or(default_window(points.points()));
        const FieldGrid grid = velocity_grid(points.points(), strengths, window, o.nx, o.ny, o.min_separation);
        return write_output(o.out, out, err, [&](std::ostream& os) { write_grid_csv(os, grid); });
    });
}

int cmd_spectrum(const SpectrumCommand& o, std::ostream& out, std::ostream& err)
{
    return guarded("spectrum", err, [&]() -> int {
        const ConfigurationFile input = read_configuration(o.input);
        const PointSet points(input.points);
        const SpectralReport spec = spectral_report(build_matrix(points), o.mode, o.tol);
        std::ostringstream text;
        text << "N = " << points.size() << "  mode " << to_string(spec.mode) << "  rank " << spec.rank << '\n';
        text << pad("k", 4) << pad("sigma", 12) << pad("normalized", 12) << '\n';
        for (std::size_t k = 0; k < spec.sigma_raw.size(); ++k) {
            const std::string normalized = k < spec.sigma_normalized.size() ? fixed4(spec.sigma_normalized[k]) : "-";
            text << pad(std::to_string(k + 1), 4) << pad(fixed4(spec.sigma_raw[k]), 12) << pad(normalized, 12)
                << '\n';
        }
        text << "entropy" << pad(fixed4(spec.entropy), 21) << '\n';
        text << "gap    " << pad(fixed4(spec.spectral_gap_raw), 9) << pad(fixed4(spec.spectral_gap_normalized), 12)
            << '\n';
        return write_text(o.out, out, err, text.str());
    });
}

int cmd_orbit(const OrbitCommand& o, std::ostream& out, std::ostream& err)
{
    if (!(o.r0 > 0.0) || !(o.t_final > 0.0) || o.rows == 0 || o.steps == 0) {
        err << "orbit: r0 and t-final must be positive, rows and steps nonzero\n";
        return exit_usage;
    }
    const OrbitParams params{o.gamma, o.r0, o.theta0};
    const double t_c = collapse_time(params);
    if (o.t_final >= t_c) {
        err << "orbit: the sink reaches the origin at t = " << fixed4(t_c) << '\n';
        return exit_collision;
    }
    std::ostringstream text;
    text << pad("t", 10) << pad("r", 12) << pad("theta", 12) << pad("r rk4", 12) << pad("theta rk4", 12)
        << pad("error", 13) << '\n';
    double worst = 0.0;
    for (std::size_t k = 0; k <= o.rows; ++k) {
        const double t = o.t_final * static_cast<double>(k) / static_cast<double>(o.rows);
        const OrbitState exact = single_orbit(params, t);
        const OrbitState numeric = k == 0 ? OrbitState{o.r0, o.theta0} : integrate_orbit(params, t, o.steps);
        const double error = std::max(std::abs(exact.r - numeric.r), std::abs(exact.theta - numeric.theta));
        worst = std::max(worst, error);
        text << pad(fixed4(t), 10) << pad(fixed4(exact.r), 12) << pad(fixed4(exact.theta), 12)
            << pad(fixed4(numeric.r), 12) << pad(fixed4(numeric.theta), 12) << pad(sci4(error), 13) << '\n';
    }
    text << "collapse time  " << (std::isfinite(t_c) ? fixed4(t_c) : std::string("none")) << '\n';
    text << "max error      " << sci4(worst) << '\n';
    const int code = write_text(o.out, out, err, text.str());
    return code != exit_ok ? code : worst <= o.tol ? exit_ok : exit_tolerance;
}

}  // namespace singeq::cli
