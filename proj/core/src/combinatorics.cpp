#include "maabo/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace maabo {

FeatureSubset::FeatureSubset(std::vector<FeatureId> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
        throw std::invalid_argument("FeatureSubset: duplicate feature id");
}

bool FeatureSubset::contains(FeatureId f) const {
    return std::binary_search(members_.begin(), members_.end(), f);
}

std::size_t FeatureSubset::Hash::operator()(const FeatureSubset& s) const noexcept {
    // FNV-1a over the sorted members
    std::uint64_t h = 14695981039346656037ull;
    for (FeatureId m : s.members()) {
        h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(m));
        h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k == 0 || k == n) return 1;
    k = std::min(k, n - k);
    std::uint64_t result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        // result * (n - k + i) / i stays integral: it equals C(n-k+i, i)
        const std::uint64_t factor = n - k + i;
        const std::uint64_t g = std::gcd(result, i);
        const std::uint64_t r = result / g;
        const std::uint64_t d = i / g;
        // after dividing out g, `factor` must absorb the remaining divisor d
        std::uint64_t f = factor / d;
        if (factor % d != 0)
            throw std::logic_error("binomial: internal divisibility failure");
        std::uint64_t product = 0;
        if (__builtin_mul_overflow(r, f, &product))
            throw std::overflow_error("binomial(" + std::to_string(n) + ", " + std::to_string(k) +
                                      ") exceeds 64-bit range");
        result = product;
    }
    return result;
}

std::uint64_t fcs_size(int num_features, int subset_size) {
    if (subset_size < 1 || num_features <= subset_size)
        throw std::invalid_argument("fcs_size: requires num_features > subset_size >= 1");
    return binomial(static_cast<std::uint64_t>(num_features),
                    static_cast<std::uint64_t>(subset_size));
}

std::vector<FeatureSubset> enumerate_fcs(int num_features, int subset_size, std::uint64_t cap) {
    const std::uint64_t total = fcs_size(num_features, subset_size);
    if (total > cap)
        throw std::length_error("enumerate_fcs: " + std::to_string(total) +
                                " subsets exceed the enumeration cap of " + std::to_string(cap) +
                                "; use a sampled workflow instead");
    std::vector<FeatureSubset> out;
    out.reserve(static_cast<std::size_t>(total));
    std::vector<FeatureId> current(static_cast<std::size_t>(subset_size));
    std::iota(current.begin(), current.end(), 0);
    while (true) {
        out.emplace_back(current);
        // advance to the next combination in lexicographic order
        int i = subset_size - 1;
        while (i >= 0 && current[static_cast<std::size_t>(i)] == num_features - subset_size + i)
            --i;
        if (i < 0) break;
        ++current[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < subset_size; ++j)
            current[static_cast<std::size_t>(j)] = current[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

int mismatch_count(const FeatureSubset& f, const FeatureSubset& u) {
    if (f.size() != u.size())
        throw std::invalid_argument("mismatch_count: subsets differ in cardinality");
    const auto& a = f.members();
    const auto& b = u.members();
    std::size_t shared = 0, i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) ++i;
        else if (b[j] < a[i]) ++j;
        else { ++shared; ++i; ++j; }
    }
    return static_cast<int>(f.size() - shared);
}

std::uint64_t mismatch_class_size(int num_features, int subset_size, int mismatches) {
    if (num_features <= subset_size || subset_size < 1)
        throw std::invalid_argument("mismatch_class_size: requires num_features > subset_size >= 1");
    if (mismatches < 0 || mismatches > subset_size)
        throw std::invalid_argument("mismatch_class_size: mismatches out of [0, subset_size]");
    const auto dp = static_cast<std::uint64_t>(subset_size);
    const auto i = static_cast<std::uint64_t>(mismatches);
    return binomial(dp, dp - i) *
           binomial(static_cast<std::uint64_t>(num_features) - dp, i);
}

std::uint64_t reduced_space_size(int num_features, int subset_size, int top_features) {
    if (top_features < 1 || top_features > num_features)
        throw std::invalid_argument("reduced_space_size: top_features out of [1, num_features]");
    const std::uint64_t total = fcs_size(num_features, subset_size);
    const std::uint64_t remaining = binomial(
        static_cast<std::uint64_t>(num_features - top_features),
        static_cast<std::uint64_t>(subset_size));
    return total - remaining;
}

} // namespace maabo
