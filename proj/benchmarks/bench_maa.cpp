#include <benchmark/benchmark.h>

#include <maabo/combinatorics.hpp>
#include <maabo/maa_kernel.hpp>
#include <maabo/maabo_mt.hpp>

using namespace maabo;

static void BM_EnumerateFcs(benchmark::State& state) {
    const int num_features = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto space = enumerate_fcs(num_features, 3);
        benchmark::DoNotOptimize(space);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EnumerateFcs)->Arg(9)->Arg(29)->Arg(50)->Complexity();

static void BM_MaaDistribution(benchmark::State& state) {
    const int num_features = 29;
    const MaaParams params(0.5, 0.5, num_features, 3);
    const auto space = enumerate_fcs(num_features, 3);
    const std::vector<FeatureSubset> pool(space.begin(),
                                          space.begin() + state.range(0));
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(maa_distribution(space[i % space.size()], pool, params));
        ++i;
    }
}
BENCHMARK(BM_MaaDistribution)->Arg(10)->Arg(110);

// one full acquisition sweep: score every unverified subset against both pools
static void BM_SelectNext(benchmark::State& state) {
    const int num_features = static_cast<int>(state.range(0));
    const MaaParams params(0.5, 0.5, num_features, 3);
    const auto space = enumerate_fcs(num_features, 3);
    const std::vector<FeatureSubset> high(space.begin(), space.begin() + 27);
    const std::vector<FeatureSubset> low(space.begin() + 27, space.begin() + 110);
    for (auto _ : state) {
        benchmark::DoNotOptimize(select_next(space, high, low, params));
    }
}
BENCHMARK(BM_SelectNext)->Arg(10)->Arg(29);

BENCHMARK_MAIN();
