#include "tjcm/tjcm.hpp"

#include <benchmark/benchmark.h>

#include <numbers>

using namespace tjcm;

namespace {

ModelParams figure_params(double eta)
{
    return make_params(squeeze_from_sinh2(10.0), std::numbers::pi / 2, std::numbers::pi / 6, eta);
}

void BM_Evolve(benchmark::State& state)
{
    const ModelParams p = make_params(static_cast<double>(state.range(0)) / 4.0, 0.3, 0.7, 0.03);
    const TmsCoefficients c = tms_coefficients(p);
    for (auto _ : state)
        benchmark::DoNotOptimize(evolve(p, c, 1.7));
    state.counters["N"] = static_cast<double>(p.n_trunc);
}
BENCHMARK(BM_Evolve)->Arg(2)->Arg(4)->Arg(8)->Arg(12);

void BM_BlochVector(benchmark::State& state)
{
    const ModelParams p = figure_params(0.03);
    const AmplitudeTable a = evolve(p, tms_coefficients(p), 1.7);
    for (auto _ : state)
        benchmark::DoNotOptimize(bloch_vector(a, p.eta));
}
BENCHMARK(BM_BlochVector);

void BM_WehrlEntropy(benchmark::State& state)
{
    const SphereGrid grid(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(2 * state.range(0)));
    const BlochVector b{0.1, -0.2, 0.4};
    for (auto _ : state)
        benchmark::DoNotOptimize(wehrl_entropy(b, grid));
}
BENCHMARK(BM_WehrlEntropy)->Arg(32)->Arg(128)->Arg(256);

void BM_OracleBlock(benchmark::State& state)
{
    const ModelParams p = figure_params(0.03);
    for (auto _ : state)
        benchmark::DoNotOptimize(brute_force_evolve(p, 1.7));
}
BENCHMARK(BM_OracleBlock);

void BM_OracleDense(benchmark::State& state)
{
    const ModelParams p = make_params(1.0, 0.3, 0.7, 0.03);
    for (auto _ : state)
        benchmark::DoNotOptimize(brute_force_evolve(p, 1.7, OracleMethod::dense));
    state.counters["N"] = static_cast<double>(p.n_trunc);
}
BENCHMARK(BM_OracleDense);

} // namespace
BENCHMARK_MAIN();
