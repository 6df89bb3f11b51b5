#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace maabo {

/// Index of a feature within a dataset's feature list, stable across a run.
using FeatureId = std::int32_t;

/// An unordered, fixed-size set of feature indices. Members are kept sorted
/// so that equality, ordering and hashing all see the same canonical form.
class FeatureSubset {
public:
    FeatureSubset() = default;

    /// Takes ownership of `members`; sorts them and rejects duplicates.
    explicit FeatureSubset(std::vector<FeatureId> members);

    const std::vector<FeatureId>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool contains(FeatureId f) const;

    friend bool operator==(const FeatureSubset&, const FeatureSubset&) = default;
    /// Lexicographic order on the sorted member list; the canonical subset
    /// order used for deterministic enumeration and tie-breaking.
    friend auto operator<=>(const FeatureSubset&, const FeatureSubset&) = default;

    struct Hash {
        std::size_t operator()(const FeatureSubset& s) const noexcept;
    };

private:
    std::vector<FeatureId> members_;
};

/// C(n, k) in 64-bit unsigned arithmetic. Returns 1 when k = 0 and 0 when
/// k > n. Throws std::overflow_error if the count does not fit.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Size of the set of all subsets of `subset_size` features drawn from
/// `num_features` features. Requires num_features > subset_size >= 1.
std::uint64_t fcs_size(int num_features, int subset_size);

inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

/// Every subset_size-subset of {0, ..., num_features-1}, in lexicographic
/// order of the sorted member indices. Throws std::length_error when the
/// count exceeds `cap`.
std::vector<FeatureSubset> enumerate_fcs(int num_features, int subset_size,
                                         std::uint64_t cap = kDefaultEnumerationCap);

/// Number of members of `f` not present in `u`. Both subsets must have the
/// same cardinality.
int mismatch_count(const FeatureSubset& f, const FeatureSubset& u);

/// Number of subsets in the full combination space at mismatch distance
/// `mismatches` from any fixed subset:
/// C(subset_size, subset_size - mismatches) * C(num_features - subset_size, mismatches).
std::uint64_t mismatch_class_size(int num_features, int subset_size, int mismatches);

/// Size of the search space restricted to subsets containing at least one of
/// `top_features` designated features: C(D, D') - C(D - top_features, D').
std::uint64_t reduced_space_size(int num_features, int subset_size, int top_features);

} // namespace maabo

template <>
struct std::hash<maabo::FeatureSubset> : maabo::FeatureSubset::Hash {};
