#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "maabo/combinatorics.hpp"
#include "maabo/dataset.hpp"

namespace maabo {

enum class ClassWeighting { uniform, balanced };

struct TreeParams {
    int max_depth = 5;
    int min_samples_leaf = 1;
    ClassWeighting class_weighting = ClassWeighting::uniform;
    std::uint64_t seed = 0;
};

enum class Side { le, gt };

struct PathStep {
    FeatureId feature;
    double threshold;
    Side side;

    friend bool operator==(const PathStep&, const PathStep&) = default;
};

/// A leaf with its full root-to-leaf predicate path and training statistics.
struct LeafNode {
    std::vector<PathStep> path;
    std::vector<std::size_t> class_counts;
    std::size_t sample_size = 0;
    double gini_index = 0.0;
    int predicted_class = 0;
};

class ColumnSortCache;

/// A binary classification tree grown greedily on the Gini criterion.
/// Immutable once trained; nodes are stored in a flat vector with the root
/// at index 0.
class TrainedTree {
public:
    struct Node {
        // internal nodes carry a split, leaves carry feature = -1
        FeatureId feature = -1;
        double threshold = 0.0;
        int left = -1;
        int right = -1;
        std::vector<std::size_t> class_counts;
        std::size_t sample_size = 0;
        double gini_index = 0.0;
        int predicted_class = 0;

        bool is_leaf() const { return feature < 0; }
    };

    const std::vector<Node>& nodes() const { return nodes_; }
    const FeatureSubset& used_features() const { return used_features_; }
    const TreeParams& params() const { return params_; }
    int num_classes() const { return num_classes_; }
    std::size_t training_rows() const { return training_rows_; }

private:
    std::vector<Node> nodes_;
    FeatureSubset used_features_;
    TreeParams params_;
    int num_classes_ = 0;
    std::size_t training_rows_ = 0;

    friend TrainedTree train_tree(const Dataset&, const FeatureSubset&, const TreeParams&,
                                  ColumnSortCache*);
    friend TrainedTree truncate_tree(const TrainedTree&, int);
};

/// Gini impurity 1 - sum((w_i n_i / sum w n)^2). `weights` empty means
/// uniform. Throws on all-zero counts.
double gini(std::span<const std::size_t> class_counts, std::span<const double> weights = {});

/// Per-class weights N / (C * N_c) computed from the given counts; classes
/// absent from the data get weight 0.
std::vector<double> balanced_class_weights(std::span<const std::size_t> class_counts);

/// Sorted row order per feature column, shareable across trainings on one
/// dataset (training sorts each used column otherwise). Lazily bound to the
/// dataset it first sees; a different dataset resets it. Not thread-safe:
/// one cache per training thread.
class ColumnSortCache {
public:
    const std::vector<std::size_t>& order(const Dataset& data, FeatureId feature);

private:
    const Dataset* bound_ = nullptr;
    std::vector<std::vector<std::size_t>> orders_; // indexed by feature
};

/// Grows a tree on all rows of `data`, considering only the features in
/// `candidates`. Splits maximize the weighted Gini decrease over midpoint
/// thresholds; ties resolve to the lowest feature index, then the lowest
/// threshold. Nodes stop at purity, the depth limit, fewer than
/// 2 * min_samples_leaf rows, or zero achievable gain.
TrainedTree train_tree(const Dataset& data, const FeatureSubset& candidates,
                       const TreeParams& params, ColumnSortCache* cache = nullptr);

/// The tree the same training would produce at a smaller depth limit:
/// splits above the cut are unchanged (no split decision depends on the
/// remaining depth budget) and internal nodes at the cut become leaves.
TrainedTree truncate_tree(const TrainedTree& tree, int depth_limit);

/// Routes one row (full feature width) to a leaf and returns its class.
int predict(const TrainedTree& tree, std::span<const double> row);

/// Macro-averaged F1 over all classes; a class with zero precision or
/// recall denominator contributes 0.
double macro_f1(const TrainedTree& tree, const Dataset& data);

struct DepthSearchResult {
    TrainedTree tree;
    int best_depth = 1;
    double score = 0.0;
};

/// Trains at every depth 1..max_depth_limit, scores each on `val`, and
/// returns the best; score ties resolve to the smallest depth.
DepthSearchResult best_depth_tree(const Dataset& train, const Dataset& val,
                                  const FeatureSubset& candidates, int max_depth_limit,
                                  const TreeParams& base_params,
                                  ColumnSortCache* cache = nullptr);

/// All leaves in deterministic left-to-right order, each with its predicate
/// path from the root.
std::vector<LeafNode> leaf_nodes(const TrainedTree& tree);

/// Same leaves, but with class counts, sample size and Gini re-measured by
/// routing `data` through the tree (predicted classes stay the tree's own).
/// A leaf no row reaches reports sample_size 0 and Gini 0.
std::vector<LeafNode> leaf_nodes(const TrainedTree& tree, const Dataset& data);

} // namespace maabo
