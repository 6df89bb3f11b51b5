#include "maabo/cart.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace maabo {

double gini(std::span<const std::size_t> class_counts, std::span<const double> weights) {
    if (!weights.empty() && weights.size() != class_counts.size())
        throw std::invalid_argument("gini: weight count does not match class count");
    double total = 0.0;
    for (std::size_t c = 0; c < class_counts.size(); ++c) {
        const double w = weights.empty() ? 1.0 : weights[c];
        total += w * static_cast<double>(class_counts[c]);
    }
    if (total <= 0.0)
        throw std::invalid_argument("gini: no samples");
    double sum_sq = 0.0;
    for (std::size_t c = 0; c < class_counts.size(); ++c) {
        const double w = weights.empty() ? 1.0 : weights[c];
        const double p = w * static_cast<double>(class_counts[c]) / total;
        sum_sq += p * p;
    }
    return 1.0 - sum_sq;
}

std::vector<double> balanced_class_weights(std::span<const std::size_t> class_counts) {
    const double total = static_cast<double>(
        std::accumulate(class_counts.begin(), class_counts.end(), std::size_t{0}));
    const double c = static_cast<double>(class_counts.size());
    std::vector<double> weights(class_counts.size(), 0.0);
    for (std::size_t i = 0; i < class_counts.size(); ++i)
        if (class_counts[i] > 0)
            weights[i] = total / (c * static_cast<double>(class_counts[i]));
    return weights;
}

namespace {

struct Split {
    FeatureId feature = -1;
    double threshold = 0.0;
    double gain = 0.0;
};

double weighted_count(std::span<const std::size_t> counts, std::span<const double> weights) {
    double total = 0.0;
    for (std::size_t c = 0; c < counts.size(); ++c)
        total += weights[c] * static_cast<double>(counts[c]);
    return total;
}

double gini_from_weighted(std::span<const std::size_t> counts, std::span<const double> weights) {
    const double total = weighted_count(counts, weights);
    if (total <= 0.0) return 0.0;
    double sum_sq = 0.0;
    for (std::size_t c = 0; c < counts.size(); ++c) {
        const double p = weights[c] * static_cast<double>(counts[c]) / total;
        sum_sq += p * p;
    }
    return 1.0 - sum_sq;
}

int majority_class(std::span<const std::size_t> counts, std::span<const double> weights) {
    int best = 0;
    double best_value = -1.0;
    for (std::size_t c = 0; c < counts.size(); ++c) {
        const double v = weights[c] * static_cast<double>(counts[c]);
        if (v > best_value) { // ties keep the lowest class index
            best_value = v;
            best = static_cast<int>(c);
        }
    }
    return best;
}

std::vector<std::size_t> sorted_order(const Dataset& data, FeatureId feature) {
    std::vector<std::size_t> order(data.num_rows);
    std::iota(order.begin(), order.end(), std::size_t{0});
    const auto column = static_cast<std::size_t>(feature);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const double va = data.value(a, column);
        const double vb = data.value(b, column);
        return va < vb || (va == vb && a < b);
    });
    return order;
}

// Grows the tree over per-feature row orders sorted once up front; a split
// stably partitions every order in place, so no node ever re-sorts.
class TreeBuilder {
public:
    TreeBuilder(const Dataset& data, const FeatureSubset& candidates, const TreeParams& params,
                std::vector<TrainedTree::Node>& nodes, ColumnSortCache* cache)
        : data_(data), params_(params), nodes_(nodes) {
        const auto counts = data.class_counts();
        if (params.class_weighting == ClassWeighting::balanced)
            weights_ = balanced_class_weights(counts);
        else
            weights_.assign(counts.size(), 1.0);

        const std::size_t n = data.num_rows;
        slots_ = candidates.members();
        columns_.resize(slots_.size());
        for (std::size_t s = 0; s < slots_.size(); ++s) {
            Column& column = columns_[s];
            const FeatureId feature = slots_[s];
            column.rows = cache ? cache->order(data, feature) : sorted_order(data, feature);
            column.values.resize(n);
            column.labels.resize(n);
            const auto column_index = static_cast<std::size_t>(feature);
            for (std::size_t i = 0; i < n; ++i) {
                column.values[i] = data_.value(column.rows[i], column_index);
                column.labels[i] = data_.labels[column.rows[i]];
            }
        }
        goes_left_.assign(n, 0);
        scratch_rows_.resize(n);
        scratch_values_.resize(n);
        scratch_labels_.resize(n);
    }

    int build(std::size_t lo, std::size_t hi, int depth) {
        const int index = static_cast<int>(nodes_.size());
        nodes_.emplace_back();
        fill_stats(nodes_.back(), lo, hi);

        const Split split = find_best_split(lo, hi, depth);
        if (split.feature < 0)
            return index;

        const std::size_t n_left = partition(lo, hi, split);
        nodes_[static_cast<std::size_t>(index)].feature = split.feature;
        nodes_[static_cast<std::size_t>(index)].threshold = split.threshold;
        const int left = build(lo, lo + n_left, depth + 1);
        nodes_[static_cast<std::size_t>(index)].left = left;
        const int right = build(lo + n_left, hi, depth + 1);
        nodes_[static_cast<std::size_t>(index)].right = right;
        return index;
    }

private:
    // rows, values and labels stay aligned and sorted by value per feature
    struct Column {
        std::vector<std::size_t> rows;
        std::vector<double> values;
        std::vector<int> labels;
    };

    std::span<const int> node_labels(std::size_t lo, std::size_t hi) const {
        if (columns_.empty())
            return {data_.labels.data() + lo, hi - lo};
        return {columns_.front().labels.data() + lo, hi - lo};
    }

    void fill_stats(TrainedTree::Node& node, std::size_t lo, std::size_t hi) const {
        node.class_counts.assign(static_cast<std::size_t>(data_.num_classes), 0);
        for (int label : node_labels(lo, hi))
            ++node.class_counts[static_cast<std::size_t>(label)];
        node.sample_size = hi - lo;
        node.gini_index = gini_from_weighted(node.class_counts, weights_);
        node.predicted_class = majority_class(node.class_counts, weights_);
    }

    Split find_best_split(std::size_t lo, std::size_t hi, int depth) const {
        Split best;
        const std::size_t msl = static_cast<std::size_t>(params_.min_samples_leaf);
        const std::size_t count = hi - lo;
        if (depth >= params_.max_depth || count < 2 * msl)
            return best;
        const std::size_t num_classes = static_cast<std::size_t>(data_.num_classes);

        std::vector<std::size_t> parent_counts(num_classes, 0);
        for (int label : node_labels(lo, hi))
            ++parent_counts[static_cast<std::size_t>(label)];
        const double parent_gini = gini_from_weighted(parent_counts, weights_);
        if (parent_gini <= 0.0)
            return best;
        const double parent_weight = weighted_count(parent_counts, weights_);

        std::vector<std::size_t> left_counts(num_classes);
        std::vector<std::size_t> right_counts(num_classes);

        for (std::size_t s = 0; s < slots_.size(); ++s) {
            const Column& column = columns_[s];
            std::fill(left_counts.begin(), left_counts.end(), 0);
            right_counts = parent_counts;
            for (std::size_t i = lo; i + 1 < hi; ++i) {
                ++left_counts[static_cast<std::size_t>(column.labels[i])];
                --right_counts[static_cast<std::size_t>(column.labels[i])];
                const double value = column.values[i];
                const double next = column.values[i + 1];
                if (value == next)
                    continue; // threshold must separate distinct values
                const std::size_t n_left = i + 1 - lo;
                const std::size_t n_right = count - n_left;
                if (n_left < msl || n_right < msl)
                    continue;
                const double w_left = weighted_count(left_counts, weights_);
                const double w_right = parent_weight - w_left;
                const double gain =
                    parent_gini -
                    (w_left / parent_weight) * gini_from_weighted(left_counts, weights_) -
                    (w_right / parent_weight) * gini_from_weighted(right_counts, weights_);
                if (gain > best.gain) { // strict: ties keep lowest feature, lowest threshold
                    best.feature = slots_[s];
                    best.threshold = std::midpoint(value, next);
                    best.gain = gain;
                }
            }
        }
        if (best.gain <= 0.0)
            best.feature = -1;
        return best;
    }

    /// Stable-partitions every per-feature column over [lo, hi); returns
    /// the left-side size.
    std::size_t partition(std::size_t lo, std::size_t hi, const Split& split) {
        const std::size_t split_slot = static_cast<std::size_t>(
            std::find(slots_.begin(), slots_.end(), split.feature) - slots_.begin());
        const Column& split_column = columns_[split_slot];
        std::size_t n_left = 0;
        for (std::size_t i = lo; i < hi; ++i) {
            const char left = split_column.values[i] <= split.threshold ? 1 : 0;
            goes_left_[split_column.rows[i]] = left;
            n_left += static_cast<std::size_t>(left);
        }
        for (Column& column : columns_) {
            std::size_t k = 0;
            for (int pass = 0; pass < 2; ++pass) {
                const char want = pass == 0 ? 1 : 0;
                for (std::size_t i = lo; i < hi; ++i) {
                    if (goes_left_[column.rows[i]] != want)
                        continue;
                    scratch_rows_[k] = column.rows[i];
                    scratch_values_[k] = column.values[i];
                    scratch_labels_[k] = column.labels[i];
                    ++k;
                }
            }
            const auto offset = static_cast<std::ptrdiff_t>(lo);
            std::copy_n(scratch_rows_.begin(), k, column.rows.begin() + offset);
            std::copy_n(scratch_values_.begin(), k, column.values.begin() + offset);
            std::copy_n(scratch_labels_.begin(), k, column.labels.begin() + offset);
        }
        return n_left;
    }

    const Dataset& data_;
    const TreeParams& params_;
    std::vector<TrainedTree::Node>& nodes_;
    std::vector<double> weights_;
    std::vector<FeatureId> slots_;
    std::vector<Column> columns_;
    std::vector<char> goes_left_;
    std::vector<std::size_t> scratch_rows_;
    std::vector<double> scratch_values_;
    std::vector<int> scratch_labels_;
};

} // namespace

const std::vector<std::size_t>& ColumnSortCache::order(const Dataset& data, FeatureId feature) {
    if (bound_ != &data) {
        orders_.assign(data.num_features, {});
        bound_ = &data;
    }
    auto& cached = orders_[static_cast<std::size_t>(feature)];
    if (cached.empty())
        cached = sorted_order(data, feature);
    return cached;
}

TrainedTree train_tree(const Dataset& data, const FeatureSubset& candidates,
                       const TreeParams& params, ColumnSortCache* cache) {
    if (data.num_rows == 0)
        throw std::invalid_argument("train_tree: empty dataset");
    if (params.max_depth < 1 || params.min_samples_leaf < 1)
        throw std::invalid_argument("train_tree: max_depth and min_samples_leaf must be >= 1");
    for (FeatureId f : candidates.members())
        if (f < 0 || static_cast<std::size_t>(f) >= data.num_features)
            throw std::invalid_argument("train_tree: candidate feature outside the dataset");

    TrainedTree tree;
    tree.params_ = params;
    tree.num_classes_ = data.num_classes;
    tree.training_rows_ = data.num_rows;

    TreeBuilder builder(data, candidates, params, tree.nodes_, cache);
    builder.build(0, data.num_rows, 0);

    std::vector<FeatureId> used;
    for (const auto& node : tree.nodes_)
        if (!node.is_leaf())
            used.push_back(node.feature);
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    tree.used_features_ = FeatureSubset(std::move(used));
    return tree;
}

int predict(const TrainedTree& tree, std::span<const double> row) {
    const auto& nodes = tree.nodes();
    int index = 0;
    while (!nodes[static_cast<std::size_t>(index)].is_leaf()) {
        const auto& node = nodes[static_cast<std::size_t>(index)];
        const auto feature = static_cast<std::size_t>(node.feature);
        if (feature >= row.size())
            throw std::invalid_argument("predict: row does not provide feature " +
                                        std::to_string(node.feature));
        index = row[feature] <= node.threshold ? node.left : node.right;
    }
    return nodes[static_cast<std::size_t>(index)].predicted_class;
}

double macro_f1(const TrainedTree& tree, const Dataset& data) {
    if (data.num_rows == 0)
        throw std::invalid_argument("macro_f1: empty dataset");
    const auto c = static_cast<std::size_t>(data.num_classes);
    std::vector<std::size_t> true_pos(c, 0), false_pos(c, 0), false_neg(c, 0);
    for (std::size_t r = 0; r < data.num_rows; ++r) {
        const auto truth = static_cast<std::size_t>(data.labels[r]);
        const auto predicted = static_cast<std::size_t>(predict(tree, data.row(r)));
        if (predicted == truth) {
            ++true_pos[truth];
        } else {
            ++false_pos[predicted];
            ++false_neg[truth];
        }
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < c; ++i) {
        const std::size_t p_den = true_pos[i] + false_pos[i];
        const std::size_t r_den = true_pos[i] + false_neg[i];
        if (p_den == 0 || r_den == 0)
            continue; // F1 contribution is 0
        const double precision = static_cast<double>(true_pos[i]) / static_cast<double>(p_den);
        const double recall = static_cast<double>(true_pos[i]) / static_cast<double>(r_den);
        if (precision + recall > 0.0)
            sum += 2.0 * precision * recall / (precision + recall);
    }
    return sum / static_cast<double>(c);
}

namespace {

int copy_truncated(const TrainedTree& full, int source, int depth, int depth_limit,
                   std::vector<TrainedTree::Node>& out) {
    const auto& node = full.nodes()[static_cast<std::size_t>(source)];
    const int index = static_cast<int>(out.size());
    out.push_back(node);
    if (node.is_leaf() || depth >= depth_limit) {
        auto& leaf = out[static_cast<std::size_t>(index)];
        leaf.feature = -1;
        leaf.threshold = 0.0;
        leaf.left = leaf.right = -1;
        return index;
    }
    const int left = copy_truncated(full, node.left, depth + 1, depth_limit, out);
    out[static_cast<std::size_t>(index)].left = left;
    const int right = copy_truncated(full, node.right, depth + 1, depth_limit, out);
    out[static_cast<std::size_t>(index)].right = right;
    return index;
}

} // namespace

TrainedTree truncate_tree(const TrainedTree& tree, int depth_limit) {
    if (depth_limit < 1)
        throw std::invalid_argument("truncate_tree: depth_limit must be >= 1");
    TrainedTree out = tree;
    out.params_.max_depth = depth_limit;
    out.nodes_.clear();
    copy_truncated(tree, 0, 0, depth_limit, out.nodes_);

    std::vector<FeatureId> used;
    for (const auto& node : out.nodes_)
        if (!node.is_leaf())
            used.push_back(node.feature);
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    out.used_features_ = FeatureSubset(std::move(used));
    return out;
}

DepthSearchResult best_depth_tree(const Dataset& train, const Dataset& val,
                                  const FeatureSubset& candidates, int max_depth_limit,
                                  const TreeParams& base_params, ColumnSortCache* cache) {
    if (max_depth_limit < 1)
        throw std::invalid_argument("best_depth_tree: max_depth_limit must be >= 1");
    // one pass at the full limit; shallower candidates are its truncations
    TreeParams params = base_params;
    params.max_depth = max_depth_limit;
    TrainedTree full = train_tree(train, candidates, params, cache);

    DepthSearchResult best;
    best.score = -1.0;
    for (int depth = 1; depth <= max_depth_limit; ++depth) {
        TrainedTree tree =
            depth == max_depth_limit ? std::move(full) : truncate_tree(full, depth);
        const double score = macro_f1(tree, val);
        if (score > best.score) { // ties keep the smallest depth
            best.tree = std::move(tree);
            best.best_depth = depth;
            best.score = score;
        }
    }
    return best;
}

namespace {

void collect_leaves(const TrainedTree& tree, int index, std::vector<PathStep>& path,
                    std::vector<LeafNode>& out) {
    const auto& node = tree.nodes()[static_cast<std::size_t>(index)];
    if (node.is_leaf()) {
        out.push_back({path, node.class_counts, node.sample_size, node.gini_index,
                       node.predicted_class});
        return;
    }
    path.push_back({node.feature, node.threshold, Side::le});
    collect_leaves(tree, node.left, path, out);
    path.back().side = Side::gt;
    collect_leaves(tree, node.right, path, out);
    path.pop_back();
}

} // namespace

std::vector<LeafNode> leaf_nodes(const TrainedTree& tree) {
    std::vector<LeafNode> out;
    std::vector<PathStep> path;
    collect_leaves(tree, 0, path, out);
    return out;
}

std::vector<LeafNode> leaf_nodes(const TrainedTree& tree, const Dataset& data) {
    std::vector<LeafNode> out;
    std::vector<PathStep> path;
    collect_leaves(tree, 0, path, out);

    // map node index -> position in the left-to-right leaf order
    std::vector<int> leaf_position(tree.nodes().size(), -1);
    {
        int position = 0;
        // collect_leaves walks left-first, as does this scan
        std::vector<int> stack = {0};
        while (!stack.empty()) {
            const int index = stack.back();
            stack.pop_back();
            const auto& node = tree.nodes()[static_cast<std::size_t>(index)];
            if (node.is_leaf()) {
                leaf_position[static_cast<std::size_t>(index)] = position++;
            } else {
                stack.push_back(node.right);
                stack.push_back(node.left);
            }
        }
    }

    const auto num_classes = static_cast<std::size_t>(tree.num_classes());
    for (auto& leaf : out) {
        leaf.class_counts.assign(num_classes, 0);
        leaf.sample_size = 0;
        leaf.gini_index = 0.0;
    }
    for (std::size_t r = 0; r < data.num_rows; ++r) {
        const auto row = data.row(r);
        int index = 0;
        while (!tree.nodes()[static_cast<std::size_t>(index)].is_leaf()) {
            const auto& node = tree.nodes()[static_cast<std::size_t>(index)];
            const auto feature = static_cast<std::size_t>(node.feature);
            if (feature >= row.size())
                throw std::invalid_argument("leaf_nodes: row does not provide feature " +
                                            std::to_string(node.feature));
            index = row[feature] <= node.threshold ? node.left : node.right;
        }
        LeafNode& leaf = out[static_cast<std::size_t>(leaf_position[static_cast<std::size_t>(index)])];
        ++leaf.class_counts[static_cast<std::size_t>(data.labels[r])];
        ++leaf.sample_size;
    }

    std::vector<double> weights;
    if (tree.params().class_weighting == ClassWeighting::balanced)
        weights = balanced_class_weights(data.class_counts());
    for (auto& leaf : out)
        if (leaf.sample_size > 0)
            leaf.gini_index = weights.empty() ? gini(leaf.class_counts)
                                              : gini(leaf.class_counts, weights);
    return out;
}

} // namespace maabo
