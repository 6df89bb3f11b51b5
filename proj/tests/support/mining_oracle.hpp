// Brute-force re-enactment of the greedy rule selection, kept independent
// of the library: std::list pool, std::set literal algebra, similarities
// recomputed from scratch every round.
#pragma once

#include <algorithm>
#include <list>
#include <set>
#include <utility>
#include <vector>

#include <maabo/gs_mrm.hpp>
#include <maabo/rng.hpp>

namespace oracle {

inline maabo::Rule make_rule(std::vector<maabo::Literal> literals, int class_index,
                             std::size_t n, double g, std::size_t tree = 0,
                             std::size_t leaf = 0) {
    maabo::Rule rule;
    rule.literals = std::move(literals);
    std::sort(rule.literals.begin(), rule.literals.end());
    rule.literals.erase(std::unique(rule.literals.begin(), rule.literals.end()),
                        rule.literals.end());
    rule.class_index = class_index;
    rule.sample_size = n;
    rule.gini_index = g;
    rule.tree_index = tree;
    rule.leaf_index = leaf;
    return rule;
}

inline std::vector<maabo::Rule> mine(std::vector<maabo::Rule> input,
                                     const maabo::MiningParams& p) {
    const double cutoff =
        p.gini_coefficient * (1.0 - 1.0 / static_cast<double>(p.num_classes));
    std::list<maabo::Rule> pool;
    for (const maabo::Rule& r : input)
        if (!r.literals.empty() && r.gini_index < cutoff && r.sample_size >= p.min_samples)
            pool.push_back(r);

    auto similarity = [](const maabo::Rule& a, const maabo::Rule& b) {
        std::set<std::pair<int, int>> sa, sb;
        for (const auto& l : a.literals) sa.insert({l.feature, static_cast<int>(l.direction)});
        for (const auto& l : b.literals) sb.insert({l.feature, static_cast<int>(l.direction)});
        std::size_t shared = 0;
        for (const auto& x : sa)
            if (sb.count(x)) ++shared;
        return static_cast<double>(shared) /
               static_cast<double>(std::min(sa.size(), sb.size()));
    };

    std::vector<maabo::Rule> selected;
    while (!pool.empty()) {
        auto best = pool.end();
        double best_key = 0.0;
        double best_sim = 0.0;
        for (auto it = pool.begin(); it != pool.end(); ++it) {
            double max_sim = 0.0;
            for (const maabo::Rule& s : selected)
                max_sim = std::max(max_sim, similarity(*it, s));
            const double key = it->gini_index + max_sim;
            const bool better =
                best == pool.end() || key < best_key ||
                (key == best_key &&
                 (it->gini_index < best->gini_index ||
                  (it->gini_index == best->gini_index &&
                   (it->sample_size > best->sample_size ||
                    (it->sample_size == best->sample_size &&
                     (it->tree_index < best->tree_index ||
                      (it->tree_index == best->tree_index &&
                       it->leaf_index < best->leaf_index)))))));
            if (better) {
                best = it;
                best_key = key;
                best_sim = max_sim;
            }
        }
        if (best_sim < p.simpson_threshold)
            selected.push_back(*best);
        pool.erase(best);
    }
    return selected;
}

inline std::vector<maabo::Rule> random_rules(maabo::rng::Engine& engine, std::size_t max_count) {
    using maabo::Direction;
    using maabo::Literal;
    const std::size_t count = 1 + maabo::rng::uniform_index(engine, max_count);
    std::vector<maabo::Rule> rules;
    for (std::size_t i = 0; i < count; ++i) {
        std::vector<Literal> literals;
        const std::size_t width = 1 + maabo::rng::uniform_index(engine, 4);
        for (std::size_t l = 0; l < width; ++l)
            literals.push_back(
                {static_cast<maabo::FeatureId>(maabo::rng::uniform_index(engine, 5)),
                 maabo::rng::uniform_index(engine, 2) == 0 ? Direction::small
                                                           : Direction::large});
        rules.push_back(make_rule(std::move(literals),
                                  static_cast<int>(maabo::rng::uniform_index(engine, 2)),
                                  30 + maabo::rng::uniform_index(engine, 100),
                                  0.3 * maabo::rng::uniform_real01(engine), i / 4, i % 4));
    }
    return rules;
}

inline bool same_rules(const std::vector<maabo::Rule>& a, const std::vector<maabo::Rule>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].literals != b[i].literals || a[i].tree_index != b[i].tree_index ||
            a[i].leaf_index != b[i].leaf_index)
            return false;
    return true;
}

} // namespace oracle
