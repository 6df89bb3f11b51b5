#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>

#include "experiments.hpp"

namespace {

using maabo::exp::ExperimentConfig;

struct CommonOptions {
    std::string config_path;
    std::string data_dir = "data";
    std::string out_dir;
    std::string seed_spec;
    int jobs = 1;
};

void add_common(CLI::App* cmd, CommonOptions& options, const std::string& default_out) {
    options.out_dir = default_out;
    cmd->add_option("--config", options.config_path, "JSON config file");
    cmd->add_option("--data-dir", options.data_dir, "directory with the dataset CSV files");
    cmd->add_option("--out", options.out_dir, "output directory");
    cmd->add_option("--seeds", options.seed_spec, "seed list, e.g. 0-49 or 1,2,7");
    cmd->add_option("--jobs", options.jobs, "parallel worker count");
}

ExperimentConfig resolve(const CommonOptions& options, ExperimentConfig defaults) {
    ExperimentConfig cfg = defaults;
    if (!options.config_path.empty())
        cfg = maabo::exp::load_config(options.config_path, defaults);
    if (!options.seed_spec.empty())
        cfg.seeds = maabo::exp::parse_seed_spec(options.seed_spec);
    cfg.jobs = options.jobs;
    return cfg;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Strategic decision-tree construction over feature subsets "
                 "(MAABO-MT) and reliable dissimilar rule mining (GS-MRM)"};
    app.require_subcommand(1);

    CommonOptions mine_opts, exp1_opts, exp2_opts, exp3_opts, app1_opts, app3_opts;

    auto* mine = app.add_subcommand(
        "mine", "run one search + mining pass and write the rule tables");
    add_common(mine, mine_opts, "out/mine");

    auto* exp1 = app.add_subcommand(
        "exp1", "strategy comparison across tree budgets (rule counts per strategy)");
    add_common(exp1, exp1_opts, "out/exp1");

    auto* exp2 = app.add_subcommand(
        "exp2", "noise-feature robustness sweep (guided vs randomized)");
    add_common(exp2, exp2_opts, "out/exp2");

    auto* exp3 = app.add_subcommand(
        "exp3", "per-dataset rule tables at half the combination space");
    add_common(exp3, exp3_opts, "out/exp3");

    auto* app1 = app.add_subcommand(
        "appendix1", "single-tree depth/MSL tuning under growing noise");
    add_common(app1, app1_opts, "out/appendix1");
    bool full_msl = false;
    app1->add_flag("--full-msl-grid", full_msl, "search every MSL in 1..100");

    auto* app3 = app.add_subcommand(
        "appendix3", "sampling-size cost/quality trade-off sweep");
    add_common(app3, app3_opts, "out/appendix3");

    CLI11_PARSE(app, argc, argv);

    try {
        if (mine->parsed()) {
            maabo::exp::cmd_mine(resolve(mine_opts, {}), mine_opts.data_dir, mine_opts.out_dir);
        } else if (exp1->parsed()) {
            maabo::exp::cmd_experiment1(resolve(exp1_opts, {}), exp1_opts.data_dir,
                                        exp1_opts.out_dir);
        } else if (exp2->parsed()) {
            maabo::exp::cmd_experiment2(resolve(exp2_opts, {}), exp2_opts.data_dir,
                                        exp2_opts.out_dir);
        } else if (exp3->parsed()) {
            maabo::exp::cmd_experiment3(resolve(exp3_opts, {}), exp3_opts.data_dir,
                                        exp3_opts.out_dir);
        } else if (app1->parsed()) {
            ExperimentConfig defaults;
            defaults.noise_min = 0; // the tuning study starts from the clean dataset
            defaults.full_msl_grid = full_msl;
            maabo::exp::cmd_appendix1(resolve(app1_opts, defaults), app1_opts.data_dir,
                                      app1_opts.out_dir);
        } else if (app3->parsed()) {
            maabo::exp::cmd_appendix3(resolve(app3_opts, {}), app3_opts.data_dir,
                                      app3_opts.out_dir);
        }
    } catch (const maabo::DataError& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
