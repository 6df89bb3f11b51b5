#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace maabo {

/// A fully numeric classification table: N rows by D feature columns plus an
/// integer class label per row. Produced by the ingestion routines, which
/// guarantee there are no missing cells left.
struct Dataset {
    std::string name;
    std::vector<std::string> feature_names;
    /// Per-feature rendering of the two split directions, e.g. Sex maps
    /// ("small", "large") to ("female", "male") for readable rule output.
    std::vector<std::pair<std::string, std::string>> direction_labels;
    /// True for columns injected as synthetic noise.
    std::vector<bool> noise_feature;
    std::vector<std::string> class_names;

    std::vector<double> values; // row-major, num_rows x num_features
    std::vector<int> labels;    // class index per row, in [0, num_classes)
    std::size_t num_rows = 0;
    std::size_t num_features = 0;
    int num_classes = 0;

    double value(std::size_t row, std::size_t col) const {
        return values[row * num_features + col];
    }
    std::span<const double> row(std::size_t r) const {
        return {values.data() + r * num_features, num_features};
    }

    /// Per-class row counts.
    std::vector<std::size_t> class_counts() const;

    /// Throws std::invalid_argument when sizes, labels or metadata are
    /// inconsistent.
    void validate() const;
};

/// Dataset with empty metadata defaults filled in ("f1".., "small"/"large",
/// "C0"..).
Dataset make_dataset(std::string name, std::vector<std::string> feature_names,
                     std::vector<double> values, std::vector<int> labels, int num_classes);

} // namespace maabo
