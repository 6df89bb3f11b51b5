#pragma once

#include <string>
#include <vector>

#include <maabo/dataset.hpp>
#include <maabo/rng.hpp>

namespace bench {

/// Random two-class table sized like the studies this library targets.
inline maabo::Dataset make_dataset(std::size_t rows, std::size_t features,
                                   std::uint64_t seed = 1) {
    maabo::rng::Engine engine(seed);
    std::vector<double> values(rows * features);
    for (double& v : values)
        v = maabo::rng::uniform_real01(engine);
    std::vector<int> labels(rows);
    for (std::size_t r = 0; r < rows; ++r)
        labels[r] = (values[r * features] + 0.3 * values[r * features + 1] +
                     0.2 * maabo::rng::uniform_real01(engine)) > 0.75
                        ? 1
                        : 0;
    std::vector<std::string> names;
    for (std::size_t f = 0; f < features; ++f)
        names.push_back("f" + std::to_string(f + 1));
    return maabo::make_dataset("bench", std::move(names), std::move(values), std::move(labels),
                               2);
}

} // namespace bench
