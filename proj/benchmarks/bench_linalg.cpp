#include <benchmark/benchmark.h>

#include "singeq/configuration.hpp"
#include "singeq/generators.hpp"
#include "singeq/linalg.hpp"

namespace {

singeq::ConfigurationMatrix random_matrix(std::size_t n)
{
    const singeq::RegionSpec region{-1.0, 1.0, -1.0, 1.0, 2024};
    return singeq::build_matrix(singeq::generate_random_plane(n, region));
}

void BM_BuildMatrix(benchmark::State& state)
{
    const singeq::RegionSpec region{-1.0, 1.0, -1.0, 1.0, 2024};
    const auto points = singeq::generate_random_plane(static_cast<std::size_t>(state.range(0)), region);
    for (auto _ : state) {
        benchmark::DoNotOptimize(singeq::build_matrix(points));
    }
}
BENCHMARK(BM_BuildMatrix)->RangeMultiplier(2)->Range(4, 128);

void BM_Svd(benchmark::State& state)
{
    const auto a = random_matrix(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(singeq::svd(a));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Svd)->RangeMultiplier(2)->Range(4, 128)->Complexity(benchmark::oNCubed);

void BM_Eigenvalues(benchmark::State& state)
{
    const auto a = random_matrix(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(singeq::eigenvalues(a));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Eigenvalues)->RangeMultiplier(2)->Range(4, 128)->Complexity(benchmark::oNCubed);

void BM_Determinant(benchmark::State& state)
{
    const auto a = random_matrix(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(singeq::determinant(a));
    }
}
BENCHMARK(BM_Determinant)->RangeMultiplier(2)->Range(4, 128);

// Expansion is exponential, so it stops at the dispatch crossover.
void BM_PfaffianExpansion(benchmark::State& state)
{
    const auto a = random_matrix(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(singeq::pfaffian_expansion(a));
    }
}
BENCHMARK(BM_PfaffianExpansion)->DenseRange(2, 10, 2);

void BM_PfaffianHouseholder(benchmark::State& state)
{
    const auto a = random_matrix(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(singeq::pfaffian_householder(a));
    }
}
BENCHMARK(BM_PfaffianHouseholder)->DenseRange(2, 10, 2)->Arg(32)->Arg(128);

}  // namespace
