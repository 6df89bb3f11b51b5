#include <benchmark/benchmark.h>

#include <maabo/gs_mrm.hpp>
#include <maabo/rng.hpp>

using namespace maabo;

namespace {

std::vector<Rule> generate_rules(std::size_t count, std::uint64_t seed) {
    rng::Engine engine(seed);
    std::vector<Rule> rules;
    rules.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        Rule rule;
        const std::size_t width = 1 + rng::uniform_index(engine, 3);
        for (std::size_t l = 0; l < width; ++l)
            rule.literals.push_back(
                {static_cast<FeatureId>(rng::uniform_index(engine, 29)),
                 rng::uniform_index(engine, 2) == 0 ? Direction::small : Direction::large});
        std::sort(rule.literals.begin(), rule.literals.end());
        rule.literals.erase(std::unique(rule.literals.begin(), rule.literals.end()),
                            rule.literals.end());
        rule.class_index = static_cast<int>(rng::uniform_index(engine, 2));
        rule.sample_size = 20 + rng::uniform_index(engine, 200);
        rule.gini_index = 0.3 * rng::uniform_real01(engine);
        rule.tree_index = i / 10;
        rule.leaf_index = i % 10;
        rules.push_back(std::move(rule));
    }
    return rules;
}

} // namespace

static void BM_MineRules(benchmark::State& state) {
    const auto rules = generate_rules(static_cast<std::size_t>(state.range(0)), 3);
    const MiningParams params{.min_samples = 50, .gini_coefficient = 0.3,
                              .simpson_threshold = 0.7, .num_classes = 2};
    for (auto _ : state) {
        auto mined = mine_rules(rules, params);
        benchmark::DoNotOptimize(mined);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MineRules)->Range(64, 2048)->Complexity();

static void BM_Simpson(benchmark::State& state) {
    const auto rules = generate_rules(64, 5);
    std::size_t i = 0;
    for (auto _ : state) {
        const Rule& a = rules[i % rules.size()];
        const Rule& b = rules[(i * 7 + 1) % rules.size()];
        benchmark::DoNotOptimize(simpson(a, b));
        ++i;
    }
}
BENCHMARK(BM_Simpson);
