#include <CLI11.hpp>

#include <ostream>

#include "singeq/cli/commands.hpp"

namespace singeq::cli {

namespace {

struct Globals {
    std::optional<double> tol;
    std::uint64_t seed = 0;
    std::optional<std::string> out;
    std::string mode = "power";

    OutPath out_path() const { return out ? OutPath(*out) : std::nullopt; }
    NormalizationMode normalization() const { return *parse_normalization_mode(mode); }
};

Window to_window(const std::vector<double>& v)
{
    return {v[0], v[1], v[2], v[3]};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Equilibrium strengths of logarithmic point singularities", "singeq"};
    app.require_subcommand(1);

    Globals g;
    app.add_option("--tol", g.tol, "Tolerance (rank for solve/spectrum/field, drift for verify, error for orbit)");
    app.add_option("--seed", g.seed, "Random seed");
    app.add_option("--out", g.out, "Output path (default stdout)");
    app.add_option("--mode", g.mode, "Spectrum normalization")->check(CLI::IsMember({"power", "linear"}));

    // generate
    auto* gen = app.add_subcommand("generate", "Write a configuration file");
    GenerateOptions gen_opts;
    bool line = false, circle = false, plane = false;
    std::string curve;
    bool even = false, arclength = false, random = false;
    std::string samples;
    std::vector<double> region;
    auto* line_flag = gen->add_flag("--line", line, "Points on [0, 1]");
    auto* circle_flag = gen->add_flag("--circle", circle, "Points on a circle");
    auto* curve_opt = gen->add_option("--curve", curve, "Polar curve: flower, figure-eight, custom")
                          ->check(CLI::IsMember({"flower", "figure-eight", "figure_eight", "custom"}));
    auto* plane_flag = gen->add_flag("--plane,--random-plane", plane, "Uniform points in --region");
    line_flag->excludes(circle_flag, curve_opt, plane_flag);
    circle_flag->excludes(curve_opt, plane_flag);
    curve_opt->excludes(plane_flag);
    gen->add_option("--n", gen_opts.n, "Number of points")->required();
    auto* even_flag = gen->add_flag("--even", even, "Equal parameter steps (default)");
    auto* arc_flag = gen->add_flag("--arclength", arclength, "Equal arclength steps");
    auto* random_flag = gen->add_flag("--random", random, "Sorted uniform parameter draws");
    even_flag->excludes(arc_flag, random_flag);
    arc_flag->excludes(random_flag);
    gen->add_option("--radius", gen_opts.radius, "Circle radius");
    gen->add_option("--phase", gen_opts.phase, "Angular offset");
    gen->add_option("--region", region, "x_min x_max y_min y_max for --plane")->expected(4);
    gen->add_option("--samples", samples, "JSON list of [theta, r] pairs for the custom curve");
    gen->add_option("--min-sep", gen_opts.min_separation, "Minimum point separation");
    gen->fallthrough();

    // solve
    auto* solve = app.add_subcommand("solve", "Solve for equilibrium strengths and write a report");
    SolveCommand solve_opts;
    solve->add_option("input", solve_opts.input, "Configuration file")->required();
    solve->fallthrough();

    // verify
    auto* verify = app.add_subcommand("verify", "Integrate a configuration and check it stays fixed");
    VerifyCommand verify_opts;
    verify->add_option("input", verify_opts.input, "Configuration file with strengths")->required();
    verify->add_option("--t-final", verify_opts.t_final, "Integration horizon");
    verify->add_option("--dt", verify_opts.dt, "RK4 step");
    verify->add_option("--min-sep", verify_opts.min_separation, "Collision distance");
    verify->fallthrough();

    // field
    auto* field = app.add_subcommand("field", "Write the velocity field on a grid as CSV");
    FieldCommand field_opts;
    std::vector<double> window;
    field->add_option("input", field_opts.input, "Configuration file")->required();
    field->add_option("--window", window, "x_min x_max y_min y_max")->expected(4);
    field->add_option("--nx", field_opts.nx, "Grid columns")->check(CLI::Range(2, 1 << 20));
    field->add_option("--ny", field_opts.ny, "Grid rows")->check(CLI::Range(2, 1 << 20));
    field->add_flag("--ortho", field_opts.ortho, "Multiply the strengths by i");
    field->add_option("--min-sep", field_opts.min_separation, "Singular node distance");
    field->fallthrough();

    // spectrum
    auto* spectrum = app.add_subcommand("spectrum", "Print the singular value spectrum and entropy");
    SpectrumCommand spectrum_opts;
    spectrum->add_option("input", spectrum_opts.input, "Configuration file")->required();
    spectrum->fallthrough();

    // orbit
    auto* orbit = app.add_subcommand("orbit", "Compare the analytic single-singularity orbit with RK4");
    OrbitCommand orbit_opts;
    std::vector<double> gamma{1.0, 0.0};
    orbit->add_option("--gamma", gamma, "Strength as re im")->expected(2);
    orbit->add_option("--r0", orbit_opts.r0, "Initial radius");
    orbit->add_option("--theta0", orbit_opts.theta0, "Initial angle");
    orbit->add_option("--t-final", orbit_opts.t_final, "Final time");
    orbit->add_option("--rows", orbit_opts.rows, "Table rows");
    orbit->add_option("--steps", orbit_opts.steps, "RK4 steps per row");
    orbit->fallthrough();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    if (*gen) {
        const int kinds = int(line) + int(circle) + int(!curve.empty()) + int(plane);
        if (kinds != 1) {
            err << "generate: choose exactly one of --line, --circle, --curve, --plane\n";
            return exit_usage;
        }
        gen_opts.placement = line ? Placement::line
                             : circle ? Placement::circle
                             : plane ? Placement::plane
                                     : Placement::curve;
        if (!curve.empty()) {
            gen_opts.curve = *parse_polar_curve(curve == "figure_eight" ? "figure-eight" : curve);
        }
        gen_opts.distribution = arclength ? Distribution::even_arclength
                                : random  ? Distribution::random
                                          : Distribution::even_parameter;
        if (!samples.empty()) {
            gen_opts.curve_samples = samples;
        }
        if (!region.empty()) {
            gen_opts.region = to_window(region);
        }
        gen_opts.seed = g.seed;
        gen_opts.out = g.out_path();
        return cmd_generate(gen_opts, out, err);
    }
    if (*solve) {
        solve_opts.tol = g.tol.value_or(solve_opts.tol);
        solve_opts.mode = g.normalization();
        solve_opts.out = g.out_path();
        return cmd_solve(solve_opts, out, err);
    }
    if (*verify) {
        verify_opts.tol = g.tol.value_or(verify_opts.tol);
        verify_opts.out = g.out_path();
        return cmd_verify(verify_opts, out, err);
    }
    if (*field) {
        if (!window.empty()) {
            field_opts.window = to_window(window);
        }
        field_opts.tol = g.tol.value_or(field_opts.tol);
        field_opts.out = g.out_path();
        return cmd_field(field_opts, out, err);
    }
    if (*spectrum) {
        spectrum_opts.tol = g.tol.value_or(spectrum_opts.tol);
        spectrum_opts.mode = g.normalization();
        spectrum_opts.out = g.out_path();
        return cmd_spectrum(spectrum_opts, out, err);
    }
    orbit_opts.gamma = {gamma[0], gamma[1]};
    orbit_opts.tol = g.tol.value_or(orbit_opts.tol);
    orbit_opts.out = g.out_path();
    return cmd_orbit(orbit_opts, out, err);
}

}  // namespace singeq::cli
