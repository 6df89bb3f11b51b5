// Synthetic classification data for tests that must run without the real
// dataset files: a couple of informative features drive the label, the rest
// is uniform noise.
#pragma once

#include <string>
#include <vector>

#include <maabo/data_ingest.hpp>
#include <maabo/dataset.hpp>
#include <maabo/rng.hpp>

namespace synthetic {

inline maabo::Dataset make_dataset(std::size_t rows, std::size_t features, std::uint64_t seed,
                                   double label_noise = 0.1) {
    maabo::rng::Engine engine(seed);
    std::vector<double> values(rows * features);
    for (double& v : values)
        v = maabo::rng::uniform_real01(engine);
    std::vector<int> labels(rows);
    for (std::size_t r = 0; r < rows; ++r) {
        // label depends on the first two features only
        const bool positive = values[r * features] > 0.55 ||
                              (values[r * features + 1] < 0.3 && values[r * features] > 0.2);
        const bool flip = maabo::rng::uniform_real01(engine) < label_noise;
        labels[r] = (positive != flip) ? 1 : 0;
    }
    std::vector<std::string> names;
    names.reserve(features);
    for (std::size_t f = 0; f < features; ++f)
        names.push_back("f" + std::to_string(f + 1));
    return maabo::make_dataset("synthetic", std::move(names), std::move(values),
                               std::move(labels), 2);
}

inline std::pair<maabo::Dataset, maabo::Dataset> split_pair(const maabo::Dataset& data,
                                                            std::uint64_t seed = 0) {
    return maabo::split_train_val(data, {.train_fraction = 0.7, .seed = seed});
}

} // namespace synthetic
