#pragma once

#include <span>
#include <vector>

#include "maabo/combinatorics.hpp"

namespace maabo {

/// Parameters of the subset-similarity function. `mismatch_mass` is the
/// total probability mass spread over mismatching subsets (the
/// hyperparameter usually written h), `damping` the per-mismatch decay
/// factor b. Both are restricted to the open interval (0, 1) so that every
/// subset receives strictly positive mass and probability ratios stay well
/// defined.
class MaaParams {
public:
    MaaParams(double mismatch_mass, double damping, int num_features, int subset_size);

    double mismatch_mass() const { return mismatch_mass_; }
    double damping() const { return damping_; }
    int num_features() const { return num_features_; }
    int subset_size() const { return subset_size_; }

    /// Similarity value assigned to a pair of subsets with `mismatches`
    /// differing members. Precomputed per instance.
    double value_at(int mismatches) const { return values_.at(static_cast<std::size_t>(mismatches)); }

private:
    double mismatch_mass_;
    double damping_;
    int num_features_;
    int subset_size_;
    std::vector<double> values_; // indexed by mismatch count, 0..subset_size
};

/// Similarity between two subsets of equal cardinality: 1 - h at zero
/// mismatches, damped shares of h otherwise. Summed over the whole
/// combination space the values add to 1 for any fixed second argument.
double maa_similarity(const FeatureSubset& f, const FeatureSubset& u, const MaaParams& params);

/// Probability that `f` belongs to the distribution induced by `pool`:
/// the similarity to each pool member, averaged. Throws std::logic_error on
/// an empty pool.
double maa_distribution(const FeatureSubset& f, std::span<const FeatureSubset> pool,
                        const MaaParams& params);

/// Ratio of the probability under the high-score pool to the probability
/// under the low-score pool; the quantity maximized when picking the next
/// subset to evaluate.
double acquisition_ratio(const FeatureSubset& f, std::span<const FeatureSubset> high_pool,
                         std::span<const FeatureSubset> low_pool, const MaaParams& params);

} // namespace maabo
