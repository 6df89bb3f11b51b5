#include "maabo/gs_mrm.hpp"

#include <algorithm>
#include <stdexcept>

namespace maabo {

double MiningParams::gini_cutoff() const {
    return gini_coefficient * (1.0 - 1.0 / static_cast<double>(num_classes));
}

void MiningParams::validate() const {
    if (!(gini_coefficient > 0.0 && gini_coefficient <= 1.0))
        throw std::invalid_argument("MiningParams: gini_coefficient must lie in (0, 1]");
    if (!(simpson_threshold > 0.0 && simpson_threshold <= 1.0))
        throw std::invalid_argument("MiningParams: simpson_threshold must lie in (0, 1]");
    if (num_classes < 2)
        throw std::invalid_argument("MiningParams: num_classes must be >= 2");
}

Rule rule_logic(const LeafNode& leaf, std::size_t tree_index, std::size_t leaf_index) {
    Rule rule;
    rule.literals.reserve(leaf.path.size());
    for (const PathStep& step : leaf.path)
        rule.literals.push_back(
            {step.feature, step.side == Side::le ? Direction::small : Direction::large});
    std::sort(rule.literals.begin(), rule.literals.end());
    rule.literals.erase(std::unique(rule.literals.begin(), rule.literals.end()),
                        rule.literals.end());
    rule.class_index = leaf.predicted_class;
    rule.sample_size = leaf.sample_size;
    rule.gini_index = leaf.gini_index;
    rule.tree_index = tree_index;
    rule.leaf_index = leaf_index;
    return rule;
}

namespace {

std::vector<Rule> rules_from_leaves(const std::vector<LeafNode>& leaves,
                                    std::size_t tree_index) {
    std::vector<Rule> rules;
    rules.reserve(leaves.size());
    for (std::size_t i = 0; i < leaves.size(); ++i)
        rules.push_back(rule_logic(leaves[i], tree_index, i));
    return rules;
}

} // namespace

std::vector<Rule> rules_from_tree(const TrainedTree& tree, std::size_t tree_index) {
    return rules_from_leaves(leaf_nodes(tree), tree_index);
}

std::vector<Rule> rules_from_tree(const TrainedTree& tree, std::size_t tree_index,
                                  const Dataset& stats_data) {
    return rules_from_leaves(leaf_nodes(tree, stats_data), tree_index);
}

double simpson(const Rule& a, const Rule& b) {
    if (a.literals.empty() || b.literals.empty())
        throw std::invalid_argument("simpson: literal set is empty");
    std::size_t shared = 0, i = 0, j = 0;
    while (i < a.literals.size() && j < b.literals.size()) {
        if (a.literals[i] < b.literals[j]) ++i;
        else if (b.literals[j] < a.literals[i]) ++j;
        else { ++shared; ++i; ++j; }
    }
    return static_cast<double>(shared) /
           static_cast<double>(std::min(a.literals.size(), b.literals.size()));
}

std::vector<Rule> filter_rules(std::span<const Rule> rules, const MiningParams& params) {
    params.validate();
    const double cutoff = params.gini_cutoff();
    std::vector<Rule> kept;
    for (const Rule& rule : rules) {
        if (!rule.mineable()) continue;
        if (rule.gini_index >= cutoff) continue;
        if (rule.sample_size < params.min_samples) continue;
        kept.push_back(rule);
    }
    return kept;
}

namespace {

// Deterministic order among rules with equal selection keys: lower Gini,
// then larger sample, then source position.
bool prefer(const Rule& a, const Rule& b) {
    if (a.gini_index != b.gini_index) return a.gini_index < b.gini_index;
    if (a.sample_size != b.sample_size) return a.sample_size > b.sample_size;
    if (a.tree_index != b.tree_index) return a.tree_index < b.tree_index;
    return a.leaf_index < b.leaf_index;
}

} // namespace

std::vector<Rule> mine_rules(std::span<const Rule> rules, const MiningParams& params) {
    std::vector<Rule> pending = filter_rules(rules, params);
    std::vector<Rule> selected;
    std::vector<double> max_similarity(pending.size(), 0.0);

    while (!pending.empty()) {
        // max similarity to the selected set is 0 while nothing is selected
        std::size_t best = 0;
        double best_key = pending[0].gini_index + max_similarity[0];
        for (std::size_t i = 1; i < pending.size(); ++i) {
            const double key = pending[i].gini_index + max_similarity[i];
            if (key < best_key || (key == best_key && prefer(pending[i], pending[best]))) {
                best = i;
                best_key = key;
            }
        }
        if (max_similarity[best] < params.simpson_threshold) {
            selected.push_back(pending[best]);
            pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(best));
            max_similarity.erase(max_similarity.begin() + static_cast<std::ptrdiff_t>(best));
            for (std::size_t i = 0; i < pending.size(); ++i)
                max_similarity[i] =
                    std::max(max_similarity[i], simpson(pending[i], selected.back()));
        } else {
            pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(best));
            max_similarity.erase(max_similarity.begin() + static_cast<std::ptrdiff_t>(best));
        }
    }
    return selected;
}

RuleRecord to_record(const Rule& rule, const Dataset& data) {
    RuleRecord record;
    record.class_label = data.class_names.at(static_cast<std::size_t>(rule.class_index));
    record.sample_size = rule.sample_size;
    record.gini_index = rule.gini_index;
    record.literals.reserve(rule.literals.size());
    for (const Literal& literal : rule.literals) {
        const auto f = static_cast<std::size_t>(literal.feature);
        const auto& labels = data.direction_labels.at(f);
        record.literals.push_back(data.feature_names.at(f) + "/" +
                                  (literal.direction == Direction::small ? labels.first
                                                                         : labels.second));
    }
    return record;
}

} // namespace maabo
