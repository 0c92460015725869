#include <benchmark/benchmark.h>

#include <vector>

#include "biased_cube/affine.hpp"
#include "biased_cube/campaign.hpp"
#include "biased_cube/fkn.hpp"
#include "biased_cube/fourier.hpp"

namespace {

using namespace bcube;

void BM_Transform(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    CounterRng rng(1, 0);
    const auto f = randomBounded(n, makeBias(0.25), rng);
    for (auto _ : state) benchmark::DoNotOptimize(transform(f));
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}
BENCHMARK(BM_Transform)->DenseRange(4, 20, 4);

void BM_FknWitness(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    CounterRng rng(2, 0);
    const auto f = randomBoolean(n, makeBias(0.1), rng);
    for (auto _ : state) benchmark::DoNotOptimize(fknWitness(f));
}
BENCHMARK(BM_FknWitness)->Arg(4)->Arg(10)->Arg(16);

void BM_ProjectL1(benchmark::State& state) {
    CounterRng rng(3, 0);
    std::vector<double> v(static_cast<std::size_t>(state.range(0)));
    for (auto& x : v) x = rng.normal();
    for (auto _ : state) benchmark::DoNotOptimize(projectL1(v, 1.0));
}
BENCHMARK(BM_ProjectL1)->Arg(16)->Arg(1024)->Arg(65536);

void BM_Theorem3Witness(benchmark::State& state) {
    const auto f = jowExample(static_cast<int>(state.range(0)), 2.0);
    for (auto _ : state) benchmark::DoNotOptimize(theorem3Witness(f));
}
BENCHMARK(BM_Theorem3Witness)->Arg(8)->Arg(12)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
