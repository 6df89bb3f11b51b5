#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <maabo/data_ingest.hpp>
#include <maabo/dataset.hpp>
#include <maabo/gs_mrm.hpp>
#include <maabo/maabo_mt.hpp>

namespace maabo::exp {

/// One row of runs.csv for the rule-mining experiments.
struct RunRecord {
    std::string experiment;
    std::string dataset;
    std::uint64_t seed = 0;
    std::string strategy;
    int budget = 0; // trees built
    int n_noise = 0;
    std::optional<std::uint64_t> n_e; // unset renders as "inf"
    std::size_t leaf_count = 0;       // |L| before mining
    std::size_t rules_extracted = 0;  // |L'|
    double noise_content_rate = 0.0;  // share of mined rules touching a noise feature
    double best_val_score = 0.0;
    double wall_time_s = 0.0; // thread CPU time of search + mining
};

/// One row of runs.csv for the single-tree tuning study.
struct TuningRecord {
    std::string experiment;
    std::string dataset;
    std::uint64_t seed = 0;
    int n_noise = 0;
    int chosen_depth = 1;
    int chosen_msl = 1;
    double val_macro_f1 = 0.0;
    bool uses_noise = false;
    double wall_time_s = 0.0;
};

/// Everything the experiment commands read from --config. Fields start at
/// the protocol defaults; JSON values override them.
struct ExperimentConfig {
    std::string dataset = "titanic";
    std::vector<std::string> datasets = {"titanic", "boston", "diabetes"}; // exp3
    std::vector<std::uint64_t> seeds;

    int subset_size = 3;
    int initial_solutions = 10;
    int iterations = -1; // -1: half the combination space (mine/exp3 convention)
    double alpha = 0.25;
    int max_depth = 5;
    double mismatch_mass = 0.5; // h
    double damping = 0.5;      // b
    std::optional<int> top_features;            // unset: every feature
    std::optional<std::uint64_t> sample_size;   // unset: unbounded
    int min_samples_leaf = 1;
    ClassWeighting class_weighting = ClassWeighting::uniform;
    std::uint64_t enumeration_cap = kDefaultEnumerationCap;

    std::size_t beta = 50;
    double gamma = 0.3;
    double delta = 0.7;

    double train_fraction = 0.7;
    std::string strategy = "maabo"; // mine
    int noise_count = 0;            // mine
    int noise_min = 1, noise_max = 20;
    std::vector<int> budgets = {10, 20, 30, 40, 50, 60, 70, 80};
    std::vector<std::optional<std::uint64_t>> ne_sweep; // appendix3
    std::vector<int> msl_grid = {1, 2, 5, 10, 20, 50, 100};
    bool full_msl_grid = false;

    int jobs = 1;
};

/// Parses the JSON file over the given defaults. Unknown keys are an error.
ExperimentConfig load_config(const std::string& path, ExperimentConfig defaults);

/// "0-49", "3", or "1,5,9-11".
std::vector<std::uint64_t> parse_seed_spec(const std::string& spec);

Strategy parse_strategy(const std::string& name);
std::string strategy_name(Strategy strategy);

/// Loads <data_dir>/<id>.csv and applies the matching preparation. Throws
/// DataError with a pointer at the fetch script when the file is absent.
Dataset load_dataset(const std::string& id, const std::filesystem::path& data_dir);

/// Search + mining on already prepared-and-split data, with the compute
/// phase timed (thread CPU). Rule reliability statistics (n, g) are
/// measured on `full_data`, the prepared dataset the split came from.
struct PipelineResult {
    SearchResult search;
    std::vector<Rule> mined;
    std::size_t leaf_count = 0;
    double best_val_score = 0.0;
    double noise_content_rate = 0.0;
    double wall_time_s = 0.0;
};

PipelineResult run_pipeline(Strategy strategy, const SearchConfig& search_cfg,
                            const MiningParams& mining, const Dataset& train,
                            const Dataset& val, const Dataset& full_data);

/// Per-seed stream ids so noise draw, split and search stay independent.
enum class SeedStream : std::uint64_t { split = 0, noise = 1, search = 2 };
std::uint64_t stream_seed(std::uint64_t base, SeedStream stream);

// Command entry points. Each writes runs.csv / summary.csv (and rule tables
// where noted) under out_dir and returns the written records.

std::vector<RunRecord> cmd_mine(const ExperimentConfig& cfg,
                                const std::filesystem::path& data_dir,
                                const std::filesystem::path& out_dir);

std::vector<RunRecord> cmd_experiment1(const ExperimentConfig& cfg,
                                       const std::filesystem::path& data_dir,
                                       const std::filesystem::path& out_dir);

std::vector<RunRecord> cmd_experiment2(const ExperimentConfig& cfg,
                                       const std::filesystem::path& data_dir,
                                       const std::filesystem::path& out_dir);

std::vector<RunRecord> cmd_experiment3(const ExperimentConfig& cfg,
                                       const std::filesystem::path& data_dir,
                                       const std::filesystem::path& out_dir);

std::vector<TuningRecord> cmd_appendix1(const ExperimentConfig& cfg,
                                        const std::filesystem::path& data_dir,
                                        const std::filesystem::path& out_dir);

std::vector<RunRecord> cmd_appendix3(const ExperimentConfig& cfg,
                                     const std::filesystem::path& data_dir,
                                     const std::filesystem::path& out_dir);

/// Mean over one numeric field of the records in a (strategy, budget,
/// n_noise, n_e, dataset) group; used by the acceptance checks.
struct GroupKey {
    std::string dataset;
    std::string strategy;
    int budget = 0;
    int n_noise = 0;
    std::optional<std::uint64_t> n_e;

    friend bool operator==(const GroupKey&, const GroupKey&) = default;
};

double group_mean(const std::vector<RunRecord>& records, const GroupKey& key,
                  double RunRecord::* field);
double group_mean_count(const std::vector<RunRecord>& records, const GroupKey& key,
                        std::size_t RunRecord::* field);

} // namespace maabo::exp
