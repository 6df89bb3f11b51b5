#include "maabo/dataset.hpp"

#include <stdexcept>

namespace maabo {

std::vector<std::size_t> Dataset::class_counts() const {
    std::vector<std::size_t> counts(static_cast<std::size_t>(num_classes), 0);
    for (int label : labels)
        ++counts[static_cast<std::size_t>(label)];
    return counts;
}

void Dataset::validate() const {
    if (num_rows == 0)
        throw std::invalid_argument("Dataset: no rows");
    if (num_classes < 2)
        throw std::invalid_argument("Dataset: needs at least two classes");
    if (values.size() != num_rows * num_features)
        throw std::invalid_argument("Dataset: value matrix size mismatch");
    if (labels.size() != num_rows)
        throw std::invalid_argument("Dataset: label count mismatch");
    for (int label : labels)
        if (label < 0 || label >= num_classes)
            throw std::invalid_argument("Dataset: label out of range");
    if (feature_names.size() != num_features ||
        direction_labels.size() != num_features ||
        noise_feature.size() != num_features)
        throw std::invalid_argument("Dataset: per-feature metadata size mismatch");
    if (class_names.size() != static_cast<std::size_t>(num_classes))
        throw std::invalid_argument("Dataset: class name count mismatch");
}

Dataset make_dataset(std::string name, std::vector<std::string> feature_names,
                     std::vector<double> values, std::vector<int> labels, int num_classes) {
    Dataset d;
    d.name = std::move(name);
    d.num_features = feature_names.size();
    d.feature_names = std::move(feature_names);
    d.num_rows = labels.size();
    d.values = std::move(values);
    d.labels = std::move(labels);
    d.num_classes = num_classes;
    d.direction_labels.assign(d.num_features, {"small", "large"});
    d.noise_feature.assign(d.num_features, false);
    d.class_names.reserve(static_cast<std::size_t>(num_classes));
    for (int c = 0; c < num_classes; ++c)
        d.class_names.push_back("C" + std::to_string(c));
    d.validate();
    return d;
}

} // namespace maabo
