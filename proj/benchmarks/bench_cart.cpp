#include <benchmark/benchmark.h>

#include <maabo/cart.hpp>

#include "bench_data.hpp"

using namespace maabo;

static void BM_TrainTree(benchmark::State& state) {
    const auto data = bench::make_dataset(916, 9);
    const FeatureSubset features({0, 1, 2});
    const TreeParams params{.max_depth = static_cast<int>(state.range(0))};
    for (auto _ : state) {
        auto tree = train_tree(data, features, params);
        benchmark::DoNotOptimize(tree);
    }
}
BENCHMARK(BM_TrainTree)->Arg(1)->Arg(3)->Arg(5);

static void BM_BestDepthTree(benchmark::State& state) {
    const auto train = bench::make_dataset(916, 9, 1);
    const auto val = bench::make_dataset(393, 9, 2);
    const FeatureSubset features({0, 1, 2});
    for (auto _ : state) {
        auto result = best_depth_tree(train, val, features, 5, {});
        benchmark::DoNotOptimize(result);
    }
}
BENCHMARK(BM_BestDepthTree);

static void BM_MacroF1(benchmark::State& state) {
    const auto train = bench::make_dataset(916, 9, 1);
    const auto val = bench::make_dataset(393, 9, 2);
    const auto tree = train_tree(train, FeatureSubset({0, 1, 2}), {.max_depth = 5});
    for (auto _ : state) {
        benchmark::DoNotOptimize(macro_f1(tree, val));
    }
}
BENCHMARK(BM_MacroF1);
