#include "maabo/maabo_mt.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace maabo {

void SearchConfig::validate(int num_features) const {
    if (subset_size < 1 || subset_size >= num_features)
        throw std::invalid_argument("SearchConfig: subset_size must lie in [1, num_features)");
    if (initial_solutions < 1)
        throw std::invalid_argument("SearchConfig: initial_solutions must be >= 1");
    if (iterations < 0)
        throw std::invalid_argument("SearchConfig: iterations must be >= 0");
    if (!(split_coefficient > 0.0 && split_coefficient < 1.0))
        throw std::invalid_argument("SearchConfig: split_coefficient must lie in (0, 1)");
    if (max_depth < 1)
        throw std::invalid_argument("SearchConfig: max_depth must be >= 1");
    if (top_features && (*top_features < 1 || *top_features > num_features))
        throw std::invalid_argument("SearchConfig: top_features must lie in [1, num_features]");
    if (sample_size && *sample_size < 1)
        throw std::invalid_argument("SearchConfig: sample_size must be >= 1");
    const std::uint64_t space = fcs_size(num_features, subset_size);
    const std::uint64_t budget =
        static_cast<std::uint64_t>(initial_solutions) + static_cast<std::uint64_t>(iterations);
    if (budget > space)
        throw std::invalid_argument("SearchConfig: budget " + std::to_string(budget) +
                                    " exceeds the combination space of " + std::to_string(space));
    MaaParams(mismatch_mass, damping, num_features, subset_size); // parameter range check
}

SearchState make_search_state(int num_features, const SearchConfig& cfg) {
    SearchState state;
    state.unverified = enumerate_fcs(num_features, cfg.subset_size, cfg.enumeration_cap);
    state.engine.seed(cfg.seed);
    return state;
}

void evaluate_subset(SearchState& state, const SearchConfig& cfg, const Dataset& train,
                     const Dataset& val, const FeatureSubset& subset) {
    const auto it = std::lower_bound(state.unverified.begin(), state.unverified.end(), subset);
    if (it == state.unverified.end() || *it != subset)
        throw std::logic_error("evaluate_subset: subset is not unverified");
    DepthSearchResult result =
        best_depth_tree(train, val, subset, cfg.max_depth, cfg.tree, &state.sort_cache);
    state.verified.push_back(
        {subset, std::move(result.tree), result.best_depth, result.score});
    state.unverified.erase(it);
}

void init_solutions(SearchState& state, const SearchConfig& cfg, const Dataset& train,
                    const Dataset& val) {
    if (state.unverified.size() < static_cast<std::size_t>(cfg.initial_solutions))
        throw std::invalid_argument("init_solutions: fewer unverified subsets than requested");
    for (int n = 0; n < cfg.initial_solutions; ++n) {
        const auto index = static_cast<std::size_t>(
            rng::uniform_index(state.engine, state.unverified.size()));
        const FeatureSubset subset = state.unverified[index];
        evaluate_subset(state, cfg, train, val, subset);
    }
}

PoolSplit split_pools(std::span<const ScoredSubset> verified, double alpha) {
    if (verified.size() < 2)
        throw std::logic_error("split_pools: needs at least two verified subsets");
    std::vector<std::size_t> order(verified.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return verified[a].score > verified[b].score; // ties keep insertion order
    });
    auto cut = static_cast<std::size_t>(alpha * static_cast<double>(verified.size()));
    cut = std::clamp<std::size_t>(cut, 1, verified.size() - 1);
    PoolSplit pools;
    pools.high.reserve(cut);
    pools.low.reserve(verified.size() - cut);
    for (std::size_t i = 0; i < order.size(); ++i)
        (i < cut ? pools.high : pools.low).push_back(verified[order[i]].subset);
    return pools;
}

std::vector<FeatureSubset> candidate_pool(std::span<const FeatureSubset> unverified,
                                          std::span<const FeatureSubset> high_pool,
                                          int num_features, std::optional<int> top_features,
                                          std::optional<std::uint64_t> sample_size,
                                          rng::Engine& engine) {
    if (unverified.empty())
        throw std::logic_error("candidate_pool: no unverified subsets left");

    const int wanted = top_features.value_or(num_features);
    std::vector<bool> selected(static_cast<std::size_t>(num_features), false);
    if (wanted >= num_features) {
        selected.assign(selected.size(), true);
    } else {
        std::vector<std::size_t> occurrences(static_cast<std::size_t>(num_features), 0);
        for (const FeatureSubset& u : high_pool)
            for (FeatureId f : u.members())
                ++occurrences[static_cast<std::size_t>(f)];
        std::vector<FeatureId> by_frequency(static_cast<std::size_t>(num_features));
        std::iota(by_frequency.begin(), by_frequency.end(), FeatureId{0});
        std::stable_sort(by_frequency.begin(), by_frequency.end(), [&](FeatureId a, FeatureId b) {
            return occurrences[static_cast<std::size_t>(a)] >
                   occurrences[static_cast<std::size_t>(b)]; // ties toward the lower index
        });
        for (int i = 0; i < wanted; ++i)
            selected[static_cast<std::size_t>(by_frequency[static_cast<std::size_t>(i)])] = true;
    }

    std::vector<FeatureSubset> eligible;
    for (const FeatureSubset& f : unverified) {
        const bool hit = std::any_of(f.members().begin(), f.members().end(), [&](FeatureId m) {
            return selected[static_cast<std::size_t>(m)];
        });
        if (hit)
            eligible.push_back(f);
    }
    if (eligible.empty()) // every gated subset is already verified
        eligible.assign(unverified.begin(), unverified.end());

    if (sample_size && eligible.size() > *sample_size) {
        const auto picks = rng::sample_without_replacement(
            engine, eligible.size(), static_cast<std::size_t>(*sample_size));
        std::vector<FeatureSubset> sampled;
        sampled.reserve(picks.size());
        for (std::size_t index : picks)
            sampled.push_back(std::move(eligible[index]));
        return sampled;
    }
    return eligible;
}

FeatureSubset select_next(std::span<const FeatureSubset> candidates,
                          std::span<const FeatureSubset> high_pool,
                          std::span<const FeatureSubset> low_pool, const MaaParams& params) {
    if (candidates.empty())
        throw std::logic_error("select_next: empty candidate set");
    const FeatureSubset* best = nullptr;
    double best_ratio = 0.0;
    for (const FeatureSubset& f : candidates) {
        const double ratio = acquisition_ratio(f, high_pool, low_pool, params);
        if (best == nullptr || ratio > best_ratio ||
            (ratio == best_ratio && f < *best)) {
            best = &f;
            best_ratio = ratio;
        }
    }
    return *best;
}

SearchResult run_search(const SearchConfig& cfg, const Dataset& train, const Dataset& val) {
    const int num_features = static_cast<int>(train.num_features);
    cfg.validate(num_features);
    const MaaParams params(cfg.mismatch_mass, cfg.damping, num_features, cfg.subset_size);

    SearchState state = make_search_state(num_features, cfg);
    init_solutions(state, cfg, train, val);

    SearchResult result;
    for (int n = 0; n < cfg.iterations; ++n) {
        if (state.unverified.empty()) {
            result.exhausted_early = true;
            break;
        }
        const PoolSplit pools = split_pools(state.verified, cfg.split_coefficient);
        const std::vector<FeatureSubset> candidates =
            candidate_pool(state.unverified, pools.high, num_features, cfg.top_features,
                           cfg.sample_size, state.engine);
        const FeatureSubset next = select_next(candidates, pools.high, pools.low, params);
        evaluate_subset(state, cfg, train, val, next);
    }
    result.verified = std::move(state.verified);
    return result;
}

SearchResult run_baseline(Strategy strategy, const SearchConfig& cfg, const Dataset& train,
                          const Dataset& val) {
    const int num_features = static_cast<int>(train.num_features);
    SearchResult result;
    switch (strategy) {
    case Strategy::maabo:
        return run_search(cfg, train, val);
    case Strategy::all_trees: {
        SearchConfig exhaustive = cfg; // budget is the whole space here
        exhaustive.initial_solutions = 1;
        exhaustive.iterations = 0;
        exhaustive.validate(num_features);
        SearchState state = make_search_state(num_features, exhaustive);
        const std::vector<FeatureSubset> all = state.unverified;
        for (const FeatureSubset& subset : all)
            evaluate_subset(state, cfg, train, val, subset);
        result.verified = std::move(state.verified);
        return result;
    }
    case Strategy::randomized: {
        cfg.validate(num_features);
        SearchState state = make_search_state(num_features, cfg);
        const int budget = cfg.initial_solutions + cfg.iterations;
        for (int n = 0; n < budget; ++n) {
            const auto index = static_cast<std::size_t>(
                rng::uniform_index(state.engine, state.unverified.size()));
            const FeatureSubset subset = state.unverified[index];
            evaluate_subset(state, cfg, train, val, subset);
        }
        result.verified = std::move(state.verified);
        return result;
    }
    case Strategy::single_tree: {
        std::vector<FeatureId> everything(train.num_features);
        std::iota(everything.begin(), everything.end(), FeatureId{0});
        FeatureSubset all_features(std::move(everything));
        DepthSearchResult best =
            best_depth_tree(train, val, all_features, cfg.max_depth, cfg.tree);
        result.verified.push_back(
            {std::move(all_features), std::move(best.tree), best.best_depth, best.score});
        return result;
    }
    }
    throw std::invalid_argument("run_baseline: unknown strategy");
}

} // namespace maabo
