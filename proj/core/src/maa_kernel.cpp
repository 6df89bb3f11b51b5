#include "maabo/maa_kernel.hpp"

#include <stdexcept>

namespace maabo {

MaaParams::MaaParams(double mismatch_mass, double damping, int num_features, int subset_size)
    : mismatch_mass_(mismatch_mass),
      damping_(damping),
      num_features_(num_features),
      subset_size_(subset_size) {
    if (!(mismatch_mass > 0.0 && mismatch_mass < 1.0))
        throw std::invalid_argument("MaaParams: mismatch_mass must lie in (0, 1)");
    if (!(damping > 0.0 && damping < 1.0))
        throw std::invalid_argument("MaaParams: damping must lie in (0, 1)");
    if (subset_size < 1 || num_features <= subset_size)
        throw std::invalid_argument("MaaParams: requires num_features > subset_size >= 1");

    // Denominator sum_{i=1..D'} a_i b^{i-1} is independent of the subsets
    // compared, so the per-mismatch values are fixed once per parameter set.
    double denom = 0.0;
    double b_pow = 1.0;
    for (int i = 1; i <= subset_size; ++i) {
        denom += static_cast<double>(mismatch_class_size(num_features, subset_size, i)) * b_pow;
        b_pow *= damping;
    }
    values_.resize(static_cast<std::size_t>(subset_size) + 1);
    values_[0] = 1.0 - mismatch_mass;
    b_pow = 1.0;
    for (int m = 1; m <= subset_size; ++m) {
        values_[static_cast<std::size_t>(m)] = b_pow * mismatch_mass / denom;
        b_pow *= damping;
    }
}

double maa_similarity(const FeatureSubset& f, const FeatureSubset& u, const MaaParams& params) {
    if (static_cast<int>(f.size()) != params.subset_size() ||
        static_cast<int>(u.size()) != params.subset_size())
        throw std::invalid_argument("maa_similarity: subset cardinality does not match parameters");
    return params.value_at(mismatch_count(f, u));
}

double maa_distribution(const FeatureSubset& f, std::span<const FeatureSubset> pool,
                        const MaaParams& params) {
    if (pool.empty())
        throw std::logic_error("maa_distribution: conditioning pool is empty");
    double sum = 0.0;
    for (const FeatureSubset& u : pool)
        sum += maa_similarity(f, u, params);
    return sum / static_cast<double>(pool.size());
}

double acquisition_ratio(const FeatureSubset& f, std::span<const FeatureSubset> high_pool,
                         std::span<const FeatureSubset> low_pool, const MaaParams& params) {
    const double high = maa_distribution(f, high_pool, params);
    const double low = maa_distribution(f, low_pool, params);
    return high / low;
}

} // namespace maabo
