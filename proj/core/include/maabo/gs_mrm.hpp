#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "maabo/cart.hpp"

namespace maabo {

enum class Direction { small, large };

/// Smallest unit of rule logic: a feature pushed below (small) or above
/// (large) some threshold along a leaf path.
struct Literal {
    FeatureId feature;
    Direction direction;

    friend bool operator==(const Literal&, const Literal&) = default;
    friend auto operator<=>(const Literal&, const Literal&) = default;
};

/// An if-then rule read off one leaf: the deduplicated literal set of its
/// path plus the leaf statistics. `tree_index`/`leaf_index` identify the
/// source and define the canonical rule order.
struct Rule {
    std::vector<Literal> literals; // sorted, unique
    int class_index = 0;
    std::size_t sample_size = 0;
    double gini_index = 0.0;
    std::size_t tree_index = 0;
    std::size_t leaf_index = 0;

    bool mineable() const { return !literals.empty(); }
};

struct MiningParams {
    std::size_t min_samples = 50;   // leaf sample threshold (beta)
    double gini_coefficient = 0.3;  // share of the maximal Gini allowed (gamma)
    double simpson_threshold = 0.7; // similarity cutoff (delta)
    int num_classes = 2;

    /// gamma * (1 - 1/C), the strict upper bound on an admissible Gini.
    double gini_cutoff() const;
    void validate() const;
};

/// Converts a leaf path into a rule: a `<=` step yields (feature, small), a
/// `>` step (feature, large); repeated identical literals collapse. A leaf
/// with an empty path (root-only tree) yields an empty literal set, which is
/// excluded from mining.
Rule rule_logic(const LeafNode& leaf, std::size_t tree_index = 0, std::size_t leaf_index = 0);

/// All rules of one tree, in leaf order.
std::vector<Rule> rules_from_tree(const TrainedTree& tree, std::size_t tree_index = 0);

/// Rules with their reliability statistics (n, g) measured on `stats_data`
/// instead of the training-side counts stored in the tree.
std::vector<Rule> rules_from_tree(const TrainedTree& tree, std::size_t tree_index,
                                  const Dataset& stats_data);

/// Overlap coefficient |A n B| / min(|A|, |B|) of two literal sets; 1 for
/// maximal similarity, 0 for none. Throws on empty literal sets.
double simpson(const Rule& a, const Rule& b);

/// Drops rules failing the Gini bound (g >= cutoff), the sample threshold
/// (n < beta) or having no literals. Keeps input order.
std::vector<Rule> filter_rules(std::span<const Rule> rules, const MiningParams& params);

/// Greedy selection of reliable, mutually dissimilar rules: repeatedly take
/// the rule minimizing gini + max similarity to the already selected ones,
/// admit it when that similarity stays below the threshold, and drop it
/// either way. Returns the selected rules in selection order.
std::vector<Rule> mine_rules(std::span<const Rule> rules, const MiningParams& params);

/// Export form of a rule: class name plus "feature/direction" strings
/// rendered with the dataset's labels (e.g. "Sex/female", "Fare/large").
struct RuleRecord {
    std::string class_label;
    std::size_t sample_size = 0;
    double gini_index = 0.0;
    std::vector<std::string> literals;
};

RuleRecord to_record(const Rule& rule, const Dataset& data);

} // namespace maabo
