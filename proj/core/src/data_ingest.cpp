#include "maabo/data_ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include "maabo/rng.hpp"

namespace maabo {

namespace {

double parse_number(const std::string& cell, const std::string& context) {
    double value = 0.0;
    const char* begin = cell.data();
    const char* end = begin + cell.size();
    while (begin < end && (*begin == ' ' || *begin == '\t')) ++begin;
    while (end > begin && (*(end - 1) == ' ' || *(end - 1) == '\t')) --end;
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end)
        throw DataError(context + ": cannot parse '" + cell + "' as a number");
    return value;
}

std::size_t require_column(const RawTable& raw, const std::string& name,
                           const std::string& dataset) {
    if (auto col = raw.find_column(name))
        return *col;
    throw DataError(dataset + ": required column '" + name + "' is missing");
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

/// Numeric column with empty cells imputed by the median of the rest.
std::vector<double> numeric_column(const RawTable& raw, std::size_t col,
                                   const std::string& context) {
    std::vector<double> values(raw.num_rows(), 0.0);
    std::vector<double> present;
    present.reserve(raw.num_rows());
    std::vector<std::size_t> missing_rows;
    for (std::size_t r = 0; r < raw.num_rows(); ++r) {
        if (raw.missing(r, col)) {
            missing_rows.push_back(r);
        } else {
            values[r] = parse_number(raw.cell(r, col), context);
            present.push_back(values[r]);
        }
    }
    if (!missing_rows.empty()) {
        if (present.empty())
            throw DataError(context + ": column is entirely missing");
        std::sort(present.begin(), present.end());
        const std::size_t n = present.size();
        const double median = n % 2 == 1 ? present[n / 2]
                                         : (present[n / 2 - 1] + present[n / 2]) / 2.0;
        for (std::size_t r : missing_rows)
            values[r] = median;
    }
    return values;
}

} // namespace

Dataset prepare_titanic(const RawTable& raw) {
    const std::size_t col_pclass = require_column(raw, "pclass", "titanic");
    const std::size_t col_sex = require_column(raw, "sex", "titanic");
    const std::size_t col_age = require_column(raw, "age", "titanic");
    const std::size_t col_sibsp = require_column(raw, "sibsp", "titanic");
    const std::size_t col_parch = require_column(raw, "parch", "titanic");
    const std::size_t col_fare = require_column(raw, "fare", "titanic");
    const std::size_t col_embarked = require_column(raw, "embarked", "titanic");
    const std::size_t col_survived = require_column(raw, "survived", "titanic");

    const std::size_t n = raw.num_rows();
    if (n == 0)
        throw DataError("titanic: no data rows");

    const auto pclass = numeric_column(raw, col_pclass, "titanic Pclass");
    const auto age = numeric_column(raw, col_age, "titanic Age");
    const auto sibsp = numeric_column(raw, col_sibsp, "titanic SibSp");
    const auto parch = numeric_column(raw, col_parch, "titanic ParCh");
    const auto fare = numeric_column(raw, col_fare, "titanic Fare");

    std::vector<double> sex(n, 0.0);
    for (std::size_t r = 0; r < n; ++r) {
        const std::string v = lower(raw.cell(r, col_sex));
        if (v == "female") sex[r] = 0.0;
        else if (v == "male") sex[r] = 1.0;
        else throw DataError("titanic Sex: unexpected value '" + raw.cell(r, col_sex) + "'");
    }

    // mode-impute the port, then one-hot C/Q/S
    std::map<std::string, std::size_t> port_counts;
    for (std::size_t r = 0; r < n; ++r)
        if (!raw.missing(r, col_embarked))
            ++port_counts[lower(raw.cell(r, col_embarked))];
    if (port_counts.empty())
        throw DataError("titanic Embarked: column is entirely missing");
    std::string mode = port_counts.begin()->first;
    for (const auto& [port, count] : port_counts)
        if (count > port_counts[mode]) mode = port;
    std::vector<double> port_c(n, 0.0), port_q(n, 0.0), port_s(n, 0.0);
    for (std::size_t r = 0; r < n; ++r) {
        std::string v = raw.missing(r, col_embarked) ? mode : lower(raw.cell(r, col_embarked));
        if (v == "c") port_c[r] = 1.0;
        else if (v == "q") port_q[r] = 1.0;
        else if (v == "s") port_s[r] = 1.0;
        else throw DataError("titanic Embarked: unexpected value '" + v + "'");
    }

    std::vector<int> labels(n, 0);
    for (std::size_t r = 0; r < n; ++r) {
        if (raw.missing(r, col_survived))
            throw DataError("titanic Survived: missing label");
        const double v = parse_number(raw.cell(r, col_survived), "titanic Survived");
        if (v != 0.0 && v != 1.0)
            throw DataError("titanic Survived: label must be 0 or 1");
        labels[r] = static_cast<int>(v);
    }

    const std::vector<const std::vector<double>*> columns = {
        &pclass, &sex, &age, &sibsp, &parch, &fare, &port_c, &port_q, &port_s};
    std::vector<double> values;
    values.reserve(n * columns.size());
    for (std::size_t r = 0; r < n; ++r)
        for (const auto* col : columns)
            values.push_back((*col)[r]);

    Dataset d = make_dataset("titanic",
                             {"Pclass", "Sex", "Age", "SibSp", "ParCh", "Fare", "Embarked C",
                              "Embarked Q", "Embarked S"},
                             std::move(values), std::move(labels), 2);
    d.class_names = {"Death", "Survival"};
    d.direction_labels = {{"good", "bad"},   {"female", "male"}, {"low", "high"},
                          {"small", "large"}, {"small", "large"}, {"small", "large"},
                          {"false", "true"}, {"false", "true"},  {"false", "true"}};
    return d;
}

namespace {

Dataset prepare_mean_binarized(const RawTable& raw, const std::string& name,
                               const std::vector<std::vector<std::string>>& feature_aliases,
                               const std::vector<std::string>& feature_names,
                               const std::vector<std::string>& target_aliases,
                               const std::vector<std::string>& class_names) {
    std::vector<std::size_t> feature_cols;
    for (const auto& aliases : feature_aliases) {
        std::optional<std::size_t> col;
        for (const auto& alias : aliases)
            if ((col = raw.find_column(alias)))
                break;
        if (!col)
            throw DataError(name + ": required column '" + aliases.front() + "' is missing");
        feature_cols.push_back(*col);
    }
    std::optional<std::size_t> target_col;
    for (const auto& alias : target_aliases)
        if ((target_col = raw.find_column(alias)))
            break;
    if (!target_col)
        throw DataError(name + ": required target column '" + target_aliases.front() +
                        "' is missing");

    const std::size_t n = raw.num_rows();
    if (n == 0)
        throw DataError(name + ": no data rows");

    std::vector<std::vector<double>> columns;
    columns.reserve(feature_cols.size());
    for (std::size_t i = 0; i < feature_cols.size(); ++i)
        columns.push_back(numeric_column(raw, feature_cols[i], name + " " + feature_names[i]));

    std::vector<double> target(n, 0.0);
    for (std::size_t r = 0; r < n; ++r) {
        if (raw.missing(r, *target_col))
            throw DataError(name + ": missing target value");
        target[r] = parse_number(raw.cell(r, *target_col), name + " target");
    }
    const double mean = std::accumulate(target.begin(), target.end(), 0.0) /
                        static_cast<double>(n);
    std::vector<int> labels(n, 0);
    bool any_low = false, any_high = false;
    for (std::size_t r = 0; r < n; ++r) {
        labels[r] = target[r] < mean ? 0 : 1;
        (labels[r] == 0 ? any_low : any_high) = true;
    }
    if (!any_low || !any_high)
        throw DataError(name + ": target has no variance, cannot binarize at the mean");

    std::vector<double> values;
    values.reserve(n * columns.size());
    for (std::size_t r = 0; r < n; ++r)
        for (const auto& col : columns)
            values.push_back(col[r]);

    Dataset d = make_dataset(name, feature_names, std::move(values), std::move(labels), 2);
    d.class_names = class_names;
    return d;
}

} // namespace

Dataset prepare_boston(const RawTable& raw) {
    return prepare_mean_binarized(
        raw, "boston",
        {{"CRIM"}, {"ZN"}, {"INDUS"}, {"CHAS"}, {"NOX"}, {"RM"}, {"AGE"}, {"DIS"}, {"RAD"},
         {"TAX"}, {"PTRATIO"}, {"LSTAT"}},
        {"CRIM", "ZN", "INDUS", "CHAS", "NOX", "RM", "AGE", "DIS", "RAD", "TAX", "PTRATIO",
         "LSTAT"},
        {"MEDV", "target"}, {"Low price", "High price"});
}

Dataset prepare_diabetes(const RawTable& raw) {
    return prepare_mean_binarized(
        raw, "diabetes",
        {{"AGE"}, {"SEX"}, {"BMI"}, {"BP"}, {"TC", "s1"}, {"LDL", "s2"}, {"HDL", "s3"},
         {"TCH", "s4"}, {"LTG", "s5"}, {"GLU", "s6"}},
        {"AGE", "SEX", "BMI", "BP", "TC", "LDL", "HDL", "TCH", "LTG", "GLU"},
        {"target", "Y", "progression"}, {"Low progression", "High progression"});
}

Dataset add_noise_features(const Dataset& data, const NoiseSpec& spec) {
    if (spec.count < 0)
        throw std::invalid_argument("add_noise_features: count must be >= 0");
    if (spec.count == 0)
        return data;

    Dataset out = data;
    const std::size_t d_old = data.num_features;
    const auto d_new = d_old + static_cast<std::size_t>(spec.count);
    out.num_features = d_new;
    out.values.assign(data.num_rows * d_new, 0.0);
    for (std::size_t r = 0; r < data.num_rows; ++r)
        std::copy_n(data.values.begin() + static_cast<std::ptrdiff_t>(r * d_old), d_old,
                    out.values.begin() + static_cast<std::ptrdiff_t>(r * d_new));

    rng::Engine engine(spec.seed);
    for (int j = 0; j < spec.count; ++j) {
        const std::size_t col = d_old + static_cast<std::size_t>(j);
        for (std::size_t r = 0; r < data.num_rows; ++r)
            out.values[r * d_new + col] = rng::uniform_real01(engine);
        out.feature_names.push_back("Noise " + std::to_string(j + 1));
        out.direction_labels.emplace_back("small", "large");
        out.noise_feature.push_back(true);
    }
    out.validate();
    return out;
}

std::pair<Dataset, Dataset> split_train_val(const Dataset& data, const SplitSpec& spec) {
    if (!(spec.train_fraction > 0.0 && spec.train_fraction < 1.0))
        throw std::invalid_argument("split_train_val: train_fraction must lie in (0, 1)");
    if (data.num_rows < 10)
        throw std::invalid_argument("split_train_val: needs at least 10 rows");

    std::vector<std::size_t> order(data.num_rows);
    std::iota(order.begin(), order.end(), std::size_t{0});
    rng::Engine engine(spec.seed);
    rng::shuffle(engine, order);

    const auto n_train = static_cast<std::size_t>(
        std::floor(spec.train_fraction * static_cast<double>(data.num_rows)));

    auto take = [&](std::size_t begin, std::size_t end) {
        Dataset part = data;
        part.num_rows = end - begin;
        part.values.clear();
        part.labels.clear();
        part.values.reserve(part.num_rows * data.num_features);
        part.labels.reserve(part.num_rows);
        for (std::size_t i = begin; i < end; ++i) {
            const auto row = data.row(order[i]);
            part.values.insert(part.values.end(), row.begin(), row.end());
            part.labels.push_back(data.labels[order[i]]);
        }
        return part;
    };
    return {take(0, n_train), take(n_train, data.num_rows)};
}

} // namespace maabo
