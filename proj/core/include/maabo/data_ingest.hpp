#pragma once

#include <cstdint>
#include <utility>

#include "maabo/csv.hpp"
#include "maabo/dataset.hpp"

namespace maabo {

struct SplitSpec {
    double train_fraction = 0.7;
    std::uint64_t seed = 0;
};

struct NoiseSpec {
    int count = 0;
    std::uint64_t seed = 0;
};

/// Titanic passengers: Pclass, Sex (female=0/male=1), Age, SibSp, ParCh,
/// Fare, and a one-hot of the departure port. Missing numerics take the
/// column median, missing ports the column mode. Labels: death=0, survival=1.
Dataset prepare_titanic(const RawTable& raw);

/// Boston housing with the race-related column excluded (12 features).
/// Price binarized at the mean: below -> class 0 (low price).
Dataset prepare_boston(const RawTable& raw);

/// Diabetes progression, 10 features, binarized at the mean progression:
/// below -> class 0 (low progression). Accepts either the canonical
/// AGE..GLU header or the s1..s6 naming of the common distribution.
Dataset prepare_diabetes(const RawTable& raw);

/// Appends `spec.count` columns of uniform [0, 1) noise named "Noise 1"..,
/// flagged so downstream metrics can identify them. The stream depends only
/// on spec.seed.
Dataset add_noise_features(const Dataset& data, const NoiseSpec& spec);

/// Seeded uniform shuffle; the first floor(train_fraction * N) rows become
/// the training set, the rest the validation set. Requires N >= 10.
std::pair<Dataset, Dataset> split_train_val(const Dataset& data, const SplitSpec& spec);

} // namespace maabo
