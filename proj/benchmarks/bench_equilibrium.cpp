#include <benchmark/benchmark.h>

#include <vector>

#include "singeq/dynamics.hpp"
#include "singeq/equilibrium.hpp"
#include "singeq/field.hpp"
#include "singeq/generators.hpp"
#include "singeq/spectrum.hpp"

namespace {

singeq::PointSet circle(std::size_t n)
{
    return singeq::generate_circle(n, singeq::Distribution::even_parameter);
}

void BM_SolveCircle(benchmark::State& state)
{
    const auto points = circle(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(singeq::solve_strengths(points));
    }
}
BENCHMARK(BM_SolveCircle)->Arg(3)->Arg(7)->Arg(15)->Arg(31)->Arg(63);

void BM_SolveRandomPlane(benchmark::State& state)
{
    const singeq::RegionSpec region{-1.0, 1.0, -1.0, 1.0, 99};
    const auto points = singeq::generate_random_plane(static_cast<std::size_t>(state.range(0)), region);
    for (auto _ : state) {
        benchmark::DoNotOptimize(singeq::solve_strengths(points));
    }
}
BENCHMARK(BM_SolveRandomPlane)->Arg(9)->Arg(33)->Arg(65);

void BM_SpectralReport(benchmark::State& state)
{
    const auto a = singeq::build_matrix(circle(static_cast<std::size_t>(state.range(0))));
    for (auto _ : state) {
        benchmark::DoNotOptimize(singeq::spectral_report(a));
    }
}
BENCHMARK(BM_SpectralReport)->Arg(7)->Arg(31);

void BM_FixednessCheck(benchmark::State& state)
{
    const auto points = circle(static_cast<std::size_t>(state.range(0)));
    const auto strengths = singeq::solve_strengths(points).strengths;
    for (auto _ : state) {
        benchmark::DoNotOptimize(singeq::fixedness_check(points, strengths, 0.1, 1e-3));
    }
}
BENCHMARK(BM_FixednessCheck)->Arg(3)->Arg(7)->Arg(15);

void BM_VelocityGrid(benchmark::State& state)
{
    const auto points = circle(7);
    const auto strengths = singeq::solve_strengths(points).strengths;
    const auto side = static_cast<std::size_t>(state.range(0));
    const auto window = singeq::default_window(points.points());
    for (auto _ : state) {
        benchmark::DoNotOptimize(singeq::velocity_grid(points.points(), strengths, window, side, side));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}
BENCHMARK(BM_VelocityGrid)->Arg(41)->Arg(201);

}  // namespace
