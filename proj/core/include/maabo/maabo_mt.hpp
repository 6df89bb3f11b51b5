#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "maabo/cart.hpp"
#include "maabo/combinatorics.hpp"
#include "maabo/dataset.hpp"
#include "maabo/maa_kernel.hpp"
#include "maabo/rng.hpp"

namespace maabo {

struct SearchConfig {
    int subset_size = 3;          // features per subset (D')
    int initial_solutions = 10;   // random evaluations before the guided phase (N_I)
    int iterations = 70;          // guided evaluations (N_B)
    double split_coefficient = 0.25; // top fraction of verified subsets forming the high pool
    int max_depth = 5;            // depth search upper bound (p_max)
    double mismatch_mass = 0.5;   // kernel h
    double damping = 0.5;         // kernel b
    /// How many of the most frequent single features of the high pool gate
    /// the candidate space (N_U); unset means all features.
    std::optional<int> top_features;
    /// Cap on candidates scored per iteration (N_E); unset means all.
    std::optional<std::uint64_t> sample_size;
    std::uint64_t seed = 0;
    std::uint64_t enumeration_cap = kDefaultEnumerationCap;
    TreeParams tree; // max_depth is overridden by the depth search

    /// Checks the configuration against a dataset width; throws
    /// std::invalid_argument on violations.
    void validate(int num_features) const;
};

/// A feature subset with its validated tree: the unit stored in the
/// verified set.
struct ScoredSubset {
    FeatureSubset subset;
    TrainedTree tree;
    int best_depth = 1;
    double score = 0.0; // validation macro-F1
};

/// Mutable bookkeeping of one search run. `unverified` stays sorted in
/// canonical subset order; `verified` grows in evaluation order. The sort
/// cache is shared across the run's tree trainings.
struct SearchState {
    std::vector<FeatureSubset> unverified;
    std::vector<ScoredSubset> verified;
    rng::Engine engine;
    ColumnSortCache sort_cache;
};

struct PoolSplit {
    std::vector<FeatureSubset> high; // top scores (U+)
    std::vector<FeatureSubset> low;  // the remainder (U-)
};

struct SearchResult {
    std::vector<ScoredSubset> verified; // evaluation order
    bool exhausted_early = false;       // ran out of subsets before the budget
};

enum class Strategy { maabo, all_trees, randomized, single_tree };

/// Fresh state with the full combination space unverified.
SearchState make_search_state(int num_features, const SearchConfig& cfg);

/// Depth-searches `subset` on train/val and moves it from unverified to
/// verified. The subset must still be unverified.
void evaluate_subset(SearchState& state, const SearchConfig& cfg, const Dataset& train,
                     const Dataset& val, const FeatureSubset& subset);

/// Draws and evaluates cfg.initial_solutions subsets uniformly without
/// replacement.
void init_solutions(SearchState& state, const SearchConfig& cfg, const Dataset& train,
                    const Dataset& val);

/// Splits the verified list, sorted descending by score (stable), into the
/// top floor(alpha * n) subsets and the rest. The cut is clamped so neither
/// side is empty; requires at least two verified subsets.
PoolSplit split_pools(std::span<const ScoredSubset> verified, double alpha);

/// The candidate set for one iteration: unverified subsets containing at
/// least one of the `top_features` most frequent single features of the
/// high pool (ties toward lower feature index), downsampled to
/// `sample_size` when set. Falls back to all unverified subsets when no
/// candidate qualifies.
std::vector<FeatureSubset> candidate_pool(std::span<const FeatureSubset> unverified,
                                          std::span<const FeatureSubset> high_pool,
                                          int num_features, std::optional<int> top_features,
                                          std::optional<std::uint64_t> sample_size,
                                          rng::Engine& engine);

/// The candidate maximizing the acquisition ratio; ties resolve to the
/// canonically smallest subset.
FeatureSubset select_next(std::span<const FeatureSubset> candidates,
                          std::span<const FeatureSubset> high_pool,
                          std::span<const FeatureSubset> low_pool, const MaaParams& params);

/// The full search: random initial solutions, then `iterations` rounds of
/// split / sample / select / evaluate. Stops early (with a flag) when every
/// subset has been verified.
SearchResult run_search(const SearchConfig& cfg, const Dataset& train, const Dataset& val);

/// Reference strategies sharing the evaluation pipeline: every subset, a
/// random sample of subsets, or one tree over all features.
SearchResult run_baseline(Strategy strategy, const SearchConfig& cfg, const Dataset& train,
                          const Dataset& val);

} // namespace maabo
