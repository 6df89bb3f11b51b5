#include "experiments.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace maabo::exp {

namespace {

using nlohmann::json;

double thread_cpu_seconds() {
    timespec ts{};
    if (clock_gettime(CLOCK_THREAD_CPUTIME_ID, &ts) == 0)
        return static_cast<double>(ts.tv_sec) + static_cast<double>(ts.tv_nsec) * 1e-9;
    return 0.0;
}

void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& body) {
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    const auto worker_count = std::min<std::size_t>(static_cast<std::size_t>(jobs), count);
    std::vector<std::exception_ptr> errors(worker_count);
    for (std::size_t w = 0; w < worker_count; ++w) {
        workers.emplace_back([&, w] {
            try {
                for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1))
                    body(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : workers)
        t.join();
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
}

std::string format_double(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.9g", value);
    return buffer;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos)
        return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += "\"";
    return out;
}

std::string ne_label(const std::optional<std::uint64_t>& ne) {
    return ne ? std::to_string(*ne) : "inf";
}

struct Stats {
    std::size_t n = 0;
    double mean = 0.0;
    double std_dev = 0.0; // sample standard deviation

    void append_columns(std::string& row) const {
        row += "," + format_double(mean) + "," + format_double(std_dev) + "," +
               format_double(0.5 * std_dev);
    }
};

Stats stats_of(const std::vector<double>& values) {
    Stats s;
    s.n = values.size();
    if (s.n == 0) return s;
    s.mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(s.n);
    if (s.n >= 2) {
        double ss = 0.0;
        for (double v : values)
            ss += (v - s.mean) * (v - s.mean);
        s.std_dev = std::sqrt(ss / static_cast<double>(s.n - 1));
    }
    return s;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write '" + path.string() + "'");
    out << content;
}

std::string runs_csv(const std::vector<RunRecord>& records) {
    std::string out =
        "schema_version,experiment,dataset,seed,strategy,budget,n_noise,n_e,leaf_count,"
        "rules_extracted,noise_content_rate,best_val_score,wall_time_s\n";
    for (const RunRecord& r : records) {
        out += "1," + r.experiment + "," + r.dataset + "," + std::to_string(r.seed) + "," +
               r.strategy + "," + std::to_string(r.budget) + "," + std::to_string(r.n_noise) +
               "," + ne_label(r.n_e) + "," + std::to_string(r.leaf_count) + "," +
               std::to_string(r.rules_extracted) + "," + format_double(r.noise_content_rate) +
               "," + format_double(r.best_val_score) + "," + format_double(r.wall_time_s) + "\n";
    }
    return out;
}

std::string summary_csv(const std::vector<RunRecord>& records) {
    // group on (dataset, strategy, budget, n_noise, n_e) in first-appearance order
    std::vector<GroupKey> keys;
    for (const RunRecord& r : records) {
        const GroupKey key{r.dataset, r.strategy, r.budget, r.n_noise, r.n_e};
        if (std::find(keys.begin(), keys.end(), key) == keys.end())
            keys.push_back(key);
    }
    std::string out =
        "schema_version,experiment,dataset,strategy,budget,n_noise,n_e,runs,"
        "rules_mean,rules_std,rules_halfstd,"
        "noise_rate_mean,noise_rate_std,noise_rate_halfstd,"
        "best_val_mean,best_val_std,best_val_halfstd,"
        "wall_time_mean,wall_time_std,wall_time_halfstd,"
        "leaf_count_mean,leaf_count_std,leaf_count_halfstd\n";
    for (const GroupKey& key : keys) {
        std::vector<double> rules, noise_rate, best_val, wall, leaves;
        std::string experiment;
        for (const RunRecord& r : records) {
            if (GroupKey{r.dataset, r.strategy, r.budget, r.n_noise, r.n_e} != key)
                continue;
            experiment = r.experiment;
            rules.push_back(static_cast<double>(r.rules_extracted));
            noise_rate.push_back(r.noise_content_rate);
            best_val.push_back(r.best_val_score);
            wall.push_back(r.wall_time_s);
            leaves.push_back(static_cast<double>(r.leaf_count));
        }
        std::string row = "1," + experiment + "," + key.dataset + "," + key.strategy + "," +
                          std::to_string(key.budget) + "," + std::to_string(key.n_noise) + "," +
                          ne_label(key.n_e) + "," + std::to_string(rules.size());
        stats_of(rules).append_columns(row);
        stats_of(noise_rate).append_columns(row);
        stats_of(best_val).append_columns(row);
        stats_of(wall).append_columns(row);
        stats_of(leaves).append_columns(row);
        out += row + "\n";
    }
    return out;
}

std::string tuning_runs_csv(const std::vector<TuningRecord>& records) {
    std::string out =
        "schema_version,experiment,dataset,seed,n_noise,chosen_depth,chosen_msl,"
        "val_macro_f1,uses_noise,wall_time_s\n";
    for (const TuningRecord& r : records) {
        out += "1," + r.experiment + "," + r.dataset + "," + std::to_string(r.seed) + "," +
               std::to_string(r.n_noise) + "," + std::to_string(r.chosen_depth) + "," +
               std::to_string(r.chosen_msl) + "," + format_double(r.val_macro_f1) + "," +
               (r.uses_noise ? "1" : "0") + "," + format_double(r.wall_time_s) + "\n";
    }
    return out;
}

std::string tuning_summary_csv(const std::vector<TuningRecord>& records) {
    std::vector<int> levels;
    for (const TuningRecord& r : records)
        if (std::find(levels.begin(), levels.end(), r.n_noise) == levels.end())
            levels.push_back(r.n_noise);
    std::string out =
        "schema_version,experiment,dataset,n_noise,runs,"
        "depth_mean,depth_std,depth_halfstd,"
        "val_f1_mean,val_f1_std,val_f1_halfstd,"
        "noise_inclusion_mean,noise_inclusion_std,noise_inclusion_halfstd\n";
    for (int level : levels) {
        std::vector<double> depth, f1, inclusion;
        std::string experiment, dataset;
        for (const TuningRecord& r : records) {
            if (r.n_noise != level) continue;
            experiment = r.experiment;
            dataset = r.dataset;
            depth.push_back(static_cast<double>(r.chosen_depth));
            f1.push_back(r.val_macro_f1);
            inclusion.push_back(r.uses_noise ? 1.0 : 0.0);
        }
        std::string row = "1," + experiment + "," + dataset + "," + std::to_string(level) + "," +
                          std::to_string(depth.size());
        stats_of(depth).append_columns(row);
        stats_of(f1).append_columns(row);
        stats_of(inclusion).append_columns(row);
        out += row + "\n";
    }
    return out;
}

std::string rules_csv(const std::vector<std::pair<std::string, RuleRecord>>& rows) {
    std::string out = "schema_version,method,rule_id,class,sample_size,gini,literals\n";
    std::map<std::string, int> counters;
    for (const auto& [method, record] : rows) {
        const int id = ++counters[method];
        std::string literals;
        for (std::size_t i = 0; i < record.literals.size(); ++i) {
            if (i) literals += ", ";
            literals += record.literals[i];
        }
        out += "1," + method + ",R" + std::to_string(id) + "," + csv_escape(record.class_label) +
               "," + std::to_string(record.sample_size) + "," +
               format_double(record.gini_index) + "," + csv_escape(literals) + "\n";
    }
    return out;
}

json rules_json(const std::vector<std::pair<std::string, RuleRecord>>& rows) {
    json array = json::array();
    std::map<std::string, int> counters;
    for (const auto& [method, record] : rows) {
        json entry;
        entry["method"] = method;
        entry["rule_id"] = "R" + std::to_string(++counters[method]);
        entry["class"] = record.class_label;
        entry["sample_size"] = record.sample_size;
        entry["gini"] = record.gini_index;
        entry["literals"] = record.literals;
        array.push_back(entry);
    }
    return array;
}

std::vector<std::uint64_t> default_seeds(std::size_t count) {
    std::vector<std::uint64_t> seeds(count);
    std::iota(seeds.begin(), seeds.end(), std::uint64_t{0});
    return seeds;
}

SearchConfig to_search_config(const ExperimentConfig& cfg, std::uint64_t seed) {
    SearchConfig search;
    search.subset_size = cfg.subset_size;
    search.initial_solutions = cfg.initial_solutions;
    search.iterations = std::max(cfg.iterations, 0);
    search.split_coefficient = cfg.alpha;
    search.max_depth = cfg.max_depth;
    search.mismatch_mass = cfg.mismatch_mass;
    search.damping = cfg.damping;
    search.top_features = cfg.top_features;
    search.sample_size = cfg.sample_size;
    search.seed = stream_seed(seed, SeedStream::search);
    search.enumeration_cap = cfg.enumeration_cap;
    search.tree.min_samples_leaf = cfg.min_samples_leaf;
    search.tree.class_weighting = cfg.class_weighting;
    return search;
}

MiningParams to_mining_params(const ExperimentConfig& cfg, int num_classes) {
    MiningParams mining;
    mining.min_samples = cfg.beta;
    mining.gini_coefficient = cfg.gamma;
    mining.simpson_threshold = cfg.delta;
    mining.num_classes = num_classes;
    return mining;
}

/// Budget for a "half the space" run: floor(|space| / 2).
int half_space_budget(int num_features, int subset_size) {
    return static_cast<int>(fcs_size(num_features, subset_size) / 2);
}

/// Applies a tree budget to the search config: keeps initial_solutions and
/// gives the remainder to the guided phase.
void apply_budget(SearchConfig& search, int budget) {
    if (budget <= search.initial_solutions) {
        search.initial_solutions = budget;
        search.iterations = 0;
    } else {
        search.iterations = budget - search.initial_solutions;
    }
}

Dataset prepared_noisy(const Dataset& base, int n_noise, std::uint64_t seed) {
    if (n_noise == 0)
        return base;
    return add_noise_features(base, {.count = n_noise,
                                     .seed = stream_seed(seed, SeedStream::noise)});
}

} // namespace

std::uint64_t stream_seed(std::uint64_t base, SeedStream stream) {
    return rng::derive_seed(base, static_cast<std::uint64_t>(stream));
}

std::vector<std::uint64_t> parse_seed_spec(const std::string& spec) {
    std::vector<std::uint64_t> seeds;
    std::stringstream in(spec);
    std::string part;
    while (std::getline(in, part, ',')) {
        if (part.empty())
            throw std::invalid_argument("seed spec: empty entry in '" + spec + "'");
        const auto dash = part.find('-', 1);
        try {
            if (dash == std::string::npos) {
                seeds.push_back(std::stoull(part));
            } else {
                const std::uint64_t lo = std::stoull(part.substr(0, dash));
                const std::uint64_t hi = std::stoull(part.substr(dash + 1));
                if (hi < lo)
                    throw std::invalid_argument("seed spec: descending range");
                for (std::uint64_t s = lo; s <= hi; ++s)
                    seeds.push_back(s);
            }
        } catch (const std::logic_error&) {
            throw std::invalid_argument("seed spec: cannot parse '" + part + "'");
        }
    }
    if (seeds.empty())
        throw std::invalid_argument("seed spec: no seeds in '" + spec + "'");
    return seeds;
}

Strategy parse_strategy(const std::string& name) {
    if (name == "maabo") return Strategy::maabo;
    if (name == "all_trees") return Strategy::all_trees;
    if (name == "randomized") return Strategy::randomized;
    if (name == "single_tree") return Strategy::single_tree;
    throw std::invalid_argument("unknown strategy '" + name + "'");
}

std::string strategy_name(Strategy strategy) {
    switch (strategy) {
    case Strategy::maabo: return "maabo";
    case Strategy::all_trees: return "all_trees";
    case Strategy::randomized: return "randomized";
    case Strategy::single_tree: return "single_tree";
    }
    return "?";
}

ExperimentConfig load_config(const std::string& path, ExperimentConfig cfg) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open config '" + path + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw std::invalid_argument("config '" + path + "': " + e.what());
    }
    if (!doc.is_object())
        throw std::invalid_argument("config '" + path + "': expected a JSON object");

    auto optional_u64 = [&](const json& value,
                            const std::string& key) -> std::optional<std::uint64_t> {
        if (value.is_null()) return std::nullopt;
        if (value.is_string()) {
            if (value.get<std::string>() == "inf" || value.get<std::string>() == "all")
                return std::nullopt;
            throw std::invalid_argument("config key '" + key + "': expected number or \"inf\"");
        }
        return value.get<std::uint64_t>();
    };

    try {
        for (const auto& [key, value] : doc.items()) {
            if (key == "dataset") cfg.dataset = value.get<std::string>();
            else if (key == "datasets") cfg.datasets = value.get<std::vector<std::string>>();
            else if (key == "seeds") {
                if (value.is_string())
                    cfg.seeds = parse_seed_spec(value.get<std::string>());
                else
                    cfg.seeds = value.get<std::vector<std::uint64_t>>();
            }
            else if (key == "subset_size") cfg.subset_size = value.get<int>();
            else if (key == "initial_solutions") cfg.initial_solutions = value.get<int>();
            else if (key == "iterations") cfg.iterations = value.get<int>();
            else if (key == "alpha") cfg.alpha = value.get<double>();
            else if (key == "max_depth") cfg.max_depth = value.get<int>();
            else if (key == "h" || key == "mismatch_mass") cfg.mismatch_mass = value.get<double>();
            else if (key == "b" || key == "damping") cfg.damping = value.get<double>();
            else if (key == "top_features") {
                if (value.is_null() || (value.is_string() && value.get<std::string>() == "all"))
                    cfg.top_features = std::nullopt;
                else
                    cfg.top_features = value.get<int>();
            }
            else if (key == "sample_size") cfg.sample_size = optional_u64(value, key);
            else if (key == "min_samples_leaf") cfg.min_samples_leaf = value.get<int>();
            else if (key == "class_weighting") {
                const auto name = value.get<std::string>();
                if (name == "uniform") cfg.class_weighting = ClassWeighting::uniform;
                else if (name == "balanced") cfg.class_weighting = ClassWeighting::balanced;
                else throw std::invalid_argument("class_weighting must be uniform or balanced");
            }
            else if (key == "enumeration_cap") cfg.enumeration_cap = value.get<std::uint64_t>();
            else if (key == "beta") cfg.beta = value.get<std::size_t>();
            else if (key == "gamma") cfg.gamma = value.get<double>();
            else if (key == "delta") cfg.delta = value.get<double>();
            else if (key == "train_fraction") cfg.train_fraction = value.get<double>();
            else if (key == "strategy") cfg.strategy = value.get<std::string>();
            else if (key == "noise_count") cfg.noise_count = value.get<int>();
            else if (key == "noise_min") cfg.noise_min = value.get<int>();
            else if (key == "noise_max") cfg.noise_max = value.get<int>();
            else if (key == "budgets") cfg.budgets = value.get<std::vector<int>>();
            else if (key == "ne_sweep") {
                cfg.ne_sweep.clear();
                for (const auto& entry : value)
                    cfg.ne_sweep.push_back(optional_u64(entry, key));
            }
            else if (key == "msl_grid") cfg.msl_grid = value.get<std::vector<int>>();
            else if (key == "full_msl_grid") cfg.full_msl_grid = value.get<bool>();
            else if (key == "jobs") cfg.jobs = value.get<int>();
            else throw std::invalid_argument("unknown config key '" + key + "'");
        }
    } catch (const json::exception& e) {
        throw std::invalid_argument("config '" + path + "': " + e.what());
    }
    return cfg;
}

Dataset load_dataset(const std::string& id, const std::filesystem::path& data_dir) {
    const std::filesystem::path path = data_dir / (id + ".csv");
    if (!std::filesystem::exists(path))
        throw DataError("dataset file '" + path.string() +
                        "' not found; run scripts/fetch_data.py to download it");
    const RawTable raw = load_csv(path.string());
    if (id == "titanic") return prepare_titanic(raw);
    if (id == "boston") return prepare_boston(raw);
    if (id == "diabetes") return prepare_diabetes(raw);
    throw std::invalid_argument("unknown dataset id '" + id + "'");
}

PipelineResult run_pipeline(Strategy strategy, const SearchConfig& search_cfg,
                            const MiningParams& mining, const Dataset& train,
                            const Dataset& val, const Dataset& full_data) {
    PipelineResult result;
    const double start = thread_cpu_seconds();

    result.search = run_baseline(strategy, search_cfg, train, val);

    // Rules come from trees refit on all rows at the tuned depth; the
    // train/val split only steers the search.
    std::vector<Rule> all_rules;
    ColumnSortCache full_cache;
    for (std::size_t t = 0; t < result.search.verified.size(); ++t) {
        const ScoredSubset& scored = result.search.verified[t];
        TreeParams params = search_cfg.tree;
        params.max_depth = scored.best_depth;
        const TrainedTree refit = train_tree(full_data, scored.subset, params, &full_cache);
        auto tree_rules = rules_from_tree(refit, t);
        all_rules.insert(all_rules.end(), std::make_move_iterator(tree_rules.begin()),
                         std::make_move_iterator(tree_rules.end()));
    }
    result.leaf_count = all_rules.size();
    result.mined = mine_rules(all_rules, mining);

    result.wall_time_s = thread_cpu_seconds() - start;

    for (const auto& scored : result.search.verified)
        result.best_val_score = std::max(result.best_val_score, scored.score);

    if (!result.mined.empty()) {
        std::size_t noisy = 0;
        for (const Rule& rule : result.mined) {
            const bool touches_noise =
                std::any_of(rule.literals.begin(), rule.literals.end(), [&](const Literal& l) {
                    return train.noise_feature[static_cast<std::size_t>(l.feature)];
                });
            if (touches_noise) ++noisy;
        }
        result.noise_content_rate =
            static_cast<double>(noisy) / static_cast<double>(result.mined.size());
    }
    return result;
}

std::vector<RunRecord> cmd_mine(const ExperimentConfig& cfg,
                                const std::filesystem::path& data_dir,
                                const std::filesystem::path& out_dir) {
    const std::uint64_t seed = cfg.seeds.empty() ? 0 : cfg.seeds.front();
    const Strategy strategy = parse_strategy(cfg.strategy);
    const Dataset base = load_dataset(cfg.dataset, data_dir);
    const Dataset noisy = prepared_noisy(base, cfg.noise_count, seed);
    const auto [train, val] = split_train_val(
        noisy, {.train_fraction = cfg.train_fraction, .seed = stream_seed(seed, SeedStream::split)});

    SearchConfig search = to_search_config(cfg, seed);
    const int num_features = static_cast<int>(train.num_features);
    if (cfg.iterations < 0)
        apply_budget(search, half_space_budget(num_features, cfg.subset_size));
    const MiningParams mining = to_mining_params(cfg, train.num_classes);

    const PipelineResult result = run_pipeline(strategy, search, mining, train, val, noisy);

    RunRecord record;
    record.experiment = "mine";
    record.dataset = cfg.dataset;
    record.seed = seed;
    record.strategy = strategy_name(strategy);
    record.budget = static_cast<int>(result.search.verified.size());
    record.n_noise = cfg.noise_count;
    record.n_e = cfg.sample_size;
    record.leaf_count = result.leaf_count;
    record.rules_extracted = result.mined.size();
    record.noise_content_rate = result.noise_content_rate;
    record.best_val_score = result.best_val_score;
    record.wall_time_s = result.wall_time_s;
    const std::vector<RunRecord> records = {record};

    std::vector<std::pair<std::string, RuleRecord>> rows;
    for (const Rule& rule : result.mined)
        rows.emplace_back(record.strategy, to_record(rule, train));

    std::filesystem::create_directories(out_dir);
    write_file(out_dir / "rules.csv", rules_csv(rows));
    write_file(out_dir / "rules.json", rules_json(rows).dump(2) + "\n");
    write_file(out_dir / "runs.csv", runs_csv(records));
    write_file(out_dir / "summary.csv", summary_csv(records));

    if (result.mined.empty())
        std::cerr << "warning: no rule passed the thresholds (beta=" << cfg.beta
                  << ", gamma=" << cfg.gamma << ", delta=" << cfg.delta << ")\n";
    return records;
}

namespace {

/// Shared driver for the rule-mining experiments: every task is one
/// (seed, strategy, budget, noise level, sampling cap) pipeline run on one
/// dataset.
struct Task {
    std::string dataset;
    std::uint64_t seed = 0;
    Strategy strategy = Strategy::maabo;
    int budget = 0; // <= 0: whole space for all_trees, single tree for single_tree
    int n_noise = 0;
    std::optional<int> top_features;
    bool derive_top_features = false; // floor(D / 5) at run time
    std::optional<std::uint64_t> sample_size;
};

std::vector<RunRecord> run_tasks(const std::string& experiment, const ExperimentConfig& cfg,
                                 const std::map<std::string, Dataset>& bases,
                                 const std::vector<Task>& tasks) {
    std::vector<RunRecord> records(tasks.size());
    parallel_for(tasks.size(), cfg.jobs, [&](std::size_t index) {
        const Task& task = tasks[index];
        const Dataset& base = bases.at(task.dataset);
        const Dataset noisy = prepared_noisy(base, task.n_noise, task.seed);
        const auto [train, val] =
            split_train_val(noisy, {.train_fraction = cfg.train_fraction,
                                    .seed = stream_seed(task.seed, SeedStream::split)});
        const int num_features = static_cast<int>(train.num_features);

        SearchConfig search = to_search_config(cfg, task.seed);
        search.top_features = task.derive_top_features
                                  ? std::optional<int>(std::max(num_features / 5, 1))
                                  : task.top_features;
        search.sample_size = task.sample_size;
        if (task.budget > 0)
            apply_budget(search, task.budget);

        const MiningParams mining = to_mining_params(cfg, train.num_classes);
        const PipelineResult result =
            run_pipeline(task.strategy, search, mining, train, val, noisy);

        RunRecord& record = records[index];
        record.experiment = experiment;
        record.dataset = task.dataset;
        record.seed = task.seed;
        record.strategy = strategy_name(task.strategy);
        record.budget = static_cast<int>(result.search.verified.size());
        record.n_noise = task.n_noise;
        record.n_e = task.sample_size;
        record.leaf_count = result.leaf_count;
        record.rules_extracted = result.mined.size();
        record.noise_content_rate = result.noise_content_rate;
        record.best_val_score = result.best_val_score;
        record.wall_time_s = result.wall_time_s;
    });
    return records;
}

void write_run_outputs(const std::filesystem::path& out_dir,
                       const std::vector<RunRecord>& records) {
    std::filesystem::create_directories(out_dir);
    write_file(out_dir / "runs.csv", runs_csv(records));
    write_file(out_dir / "summary.csv", summary_csv(records));
}

} // namespace

std::vector<RunRecord> cmd_experiment1(const ExperimentConfig& cfg,
                                       const std::filesystem::path& data_dir,
                                       const std::filesystem::path& out_dir) {
    ExperimentConfig resolved = cfg;
    if (resolved.seeds.empty())
        resolved.seeds = default_seeds(50);
    std::map<std::string, Dataset> bases;
    bases.emplace(resolved.dataset, load_dataset(resolved.dataset, data_dir));

    std::vector<Task> tasks;
    for (std::uint64_t seed : resolved.seeds) {
        tasks.push_back({resolved.dataset, seed, Strategy::all_trees, 0, 0, std::nullopt, false,
                         std::nullopt});
        for (int budget : resolved.budgets)
            tasks.push_back({resolved.dataset, seed, Strategy::maabo, budget, 0,
                             resolved.top_features, false, resolved.sample_size});
        for (int budget : resolved.budgets)
            tasks.push_back({resolved.dataset, seed, Strategy::randomized, budget, 0,
                             std::nullopt, false, std::nullopt});
        tasks.push_back({resolved.dataset, seed, Strategy::single_tree, 0, 0, std::nullopt,
                         false, std::nullopt});
    }
    const auto records = run_tasks("exp1", resolved, bases, tasks);
    write_run_outputs(out_dir, records);
    return records;
}

std::vector<RunRecord> cmd_experiment2(const ExperimentConfig& cfg,
                                       const std::filesystem::path& data_dir,
                                       const std::filesystem::path& out_dir) {
    ExperimentConfig resolved = cfg;
    if (resolved.seeds.empty())
        resolved.seeds = default_seeds(50);
    if (resolved.iterations < 0)
        resolved.iterations = 100; // 110 trees with the ten initial solutions
    const int budget = resolved.initial_solutions + resolved.iterations;
    std::map<std::string, Dataset> bases;
    bases.emplace(resolved.dataset, load_dataset(resolved.dataset, data_dir));

    std::vector<Task> tasks;
    for (int n_noise = resolved.noise_min; n_noise <= resolved.noise_max; ++n_noise)
        for (std::uint64_t seed : resolved.seeds)
            for (Strategy strategy : {Strategy::maabo, Strategy::randomized})
                tasks.push_back({resolved.dataset, seed, strategy, budget, n_noise,
                                 resolved.top_features, false, resolved.sample_size});
    const auto records = run_tasks("exp2", resolved, bases, tasks);
    write_run_outputs(out_dir, records);
    return records;
}

std::vector<RunRecord> cmd_experiment3(const ExperimentConfig& cfg,
                                       const std::filesystem::path& data_dir,
                                       const std::filesystem::path& out_dir) {
    ExperimentConfig resolved = cfg;
    if (resolved.seeds.empty())
        resolved.seeds = default_seeds(50);
    std::map<std::string, Dataset> bases;
    for (const std::string& id : resolved.datasets)
        bases.emplace(id, load_dataset(id, data_dir));

    std::vector<Task> tasks;
    for (const std::string& id : resolved.datasets) {
        const int budget = half_space_budget(static_cast<int>(bases.at(id).num_features),
                                             resolved.subset_size);
        for (std::uint64_t seed : resolved.seeds) {
            tasks.push_back({id, seed, Strategy::maabo, budget, 0, resolved.top_features, false,
                             resolved.sample_size});
            tasks.push_back({id, seed, Strategy::single_tree, 0, 0, std::nullopt, false,
                             std::nullopt});
        }
    }
    const auto records = run_tasks("exp3", resolved, bases, tasks);
    write_run_outputs(out_dir, records);

    // Table-style rule listing from the first seed of each dataset
    const std::uint64_t first_seed = resolved.seeds.front();
    for (const std::string& id : resolved.datasets) {
        const Dataset& base = bases.at(id);
        const auto [train, val] =
            split_train_val(base, {.train_fraction = resolved.train_fraction,
                                   .seed = stream_seed(first_seed, SeedStream::split)});
        std::vector<std::pair<std::string, RuleRecord>> rows;
        for (Strategy strategy : {Strategy::maabo, Strategy::single_tree}) {
            SearchConfig search = to_search_config(resolved, first_seed);
            if (strategy == Strategy::maabo)
                apply_budget(search, half_space_budget(
                                         static_cast<int>(train.num_features),
                                         resolved.subset_size));
            const MiningParams mining = to_mining_params(resolved, train.num_classes);
            const PipelineResult result =
                run_pipeline(strategy, search, mining, train, val, base);
            for (const Rule& rule : result.mined)
                rows.emplace_back(strategy_name(strategy), to_record(rule, train));
        }
        write_file(out_dir / ("rules_" + id + ".csv"), rules_csv(rows));
        write_file(out_dir / ("rules_" + id + ".json"), rules_json(rows).dump(2) + "\n");
    }
    return records;
}

std::vector<TuningRecord> cmd_appendix1(const ExperimentConfig& cfg,
                                        const std::filesystem::path& data_dir,
                                        const std::filesystem::path& out_dir) {
    ExperimentConfig resolved = cfg;
    if (resolved.seeds.empty())
        resolved.seeds = default_seeds(100);
    std::vector<int> msl_grid = resolved.msl_grid;
    if (resolved.full_msl_grid) {
        msl_grid.resize(100);
        std::iota(msl_grid.begin(), msl_grid.end(), 1);
    }
    const Dataset base = load_dataset(resolved.dataset, data_dir);

    struct Cell {
        int n_noise;
        std::uint64_t seed;
    };
    std::vector<Cell> cells;
    for (int n_noise = resolved.noise_min; n_noise <= resolved.noise_max; ++n_noise)
        for (std::uint64_t seed : resolved.seeds)
            cells.push_back({n_noise, seed});

    std::vector<TuningRecord> records(cells.size());
    parallel_for(cells.size(), resolved.jobs, [&](std::size_t index) {
        const Cell& cell = cells[index];
        const Dataset noisy = prepared_noisy(base, cell.n_noise, cell.seed);
        const auto [train, val] =
            split_train_val(noisy, {.train_fraction = resolved.train_fraction,
                                    .seed = stream_seed(cell.seed, SeedStream::split)});
        std::vector<FeatureId> everything(train.num_features);
        std::iota(everything.begin(), everything.end(), FeatureId{0});
        const FeatureSubset all_features(std::move(everything));

        const double start = thread_cpu_seconds();
        TuningRecord& record = records[index];
        record.val_macro_f1 = -1.0;
        const TrainedTree* chosen = nullptr;
        TrainedTree best_tree;
        for (int depth = 1; depth <= resolved.max_depth; ++depth) {
            for (int msl : msl_grid) {
                const TrainedTree tree = train_tree(
                    train, all_features,
                    {.max_depth = depth, .min_samples_leaf = msl,
                     .class_weighting = resolved.class_weighting});
                const double score = macro_f1(tree, val);
                if (score > record.val_macro_f1) {
                    record.val_macro_f1 = score;
                    record.chosen_depth = depth;
                    record.chosen_msl = msl;
                    best_tree = tree;
                    chosen = &best_tree;
                }
            }
        }
        record.wall_time_s = thread_cpu_seconds() - start;
        record.experiment = "appendix1";
        record.dataset = resolved.dataset;
        record.seed = cell.seed;
        record.n_noise = cell.n_noise;
        if (chosen != nullptr)
            record.uses_noise = std::any_of(
                chosen->used_features().members().begin(),
                chosen->used_features().members().end(),
                [&](FeatureId f) { return train.noise_feature[static_cast<std::size_t>(f)]; });
    });

    std::filesystem::create_directories(out_dir);
    write_file(out_dir / "runs.csv", tuning_runs_csv(records));
    write_file(out_dir / "summary.csv", tuning_summary_csv(records));
    return records;
}

std::vector<RunRecord> cmd_appendix3(const ExperimentConfig& cfg,
                                     const std::filesystem::path& data_dir,
                                     const std::filesystem::path& out_dir) {
    ExperimentConfig resolved = cfg;
    if (resolved.seeds.empty())
        resolved.seeds = default_seeds(50);
    if (resolved.iterations < 0)
        resolved.iterations = 100;
    if (resolved.ne_sweep.empty())
        resolved.ne_sweep = {std::uint64_t{10}, std::uint64_t{100}, std::uint64_t{1000},
                             std::nullopt};
    const int budget = resolved.initial_solutions + resolved.iterations;
    std::map<std::string, Dataset> bases;
    bases.emplace(resolved.dataset, load_dataset(resolved.dataset, data_dir));

    std::vector<Task> tasks;
    for (int n_noise = resolved.noise_min; n_noise <= resolved.noise_max; ++n_noise)
        for (const auto& ne : resolved.ne_sweep)
            for (std::uint64_t seed : resolved.seeds)
                tasks.push_back({resolved.dataset, seed, Strategy::maabo, budget, n_noise,
                                 std::nullopt, /*derive_top_features=*/true, ne});
    const auto records = run_tasks("appendix3", resolved, bases, tasks);
    write_run_outputs(out_dir, records);
    return records;
}

namespace {

template <typename Field>
double group_mean_impl(const std::vector<RunRecord>& records, const GroupKey& key, Field field) {
    double sum = 0.0;
    std::size_t n = 0;
    for (const RunRecord& r : records) {
        if (GroupKey{r.dataset, r.strategy, r.budget, r.n_noise, r.n_e} != key)
            continue;
        sum += static_cast<double>(r.*field);
        ++n;
    }
    if (n == 0)
        throw std::invalid_argument("group_mean: no records match the key");
    return sum / static_cast<double>(n);
}

} // namespace

double group_mean(const std::vector<RunRecord>& records, const GroupKey& key,
                  double RunRecord::* field) {
    return group_mean_impl(records, key, field);
}

double group_mean_count(const std::vector<RunRecord>& records, const GroupKey& key,
                        std::size_t RunRecord::* field) {
    return group_mean_impl(records, key, field);
}

} // namespace maabo::exp
