// Command line front end for the importance-aided neural network library:
// cross-validation and learning-curve experiments on DNA benchmark files,
// importance diagnostics of trained models, single training runs, and
// conversion of rule-antecedent counts into FRI files.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "iann/dataset.hpp"
#include "iann/errors.hpp"
#include "iann/experiment.hpp"
#include "iann/fri.hpp"
#include "iann/importance.hpp"
#include "iann/network_io.hpp"
#include "iann/train.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitOther = 1;
constexpr int kExitConfig = 2;
constexpr int kExitData = 3;
constexpr int kExitNumeric = 4;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw iann::parse_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spill(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw iann::parse_error("cannot open output file: " + path);
    out << text;
    if (!out) throw iann::parse_error("cannot write output file: " + path);
}

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        spill(out_path, text);
    }
}

/// Options shared by every command that trains networks.
struct CommonOptions {
    std::string data_path;
    std::string fri_path;
    std::string fri_inline;
    int hidden = 23;
    int epochs = 100;
    double learning_rate = 0.1;
    std::string init = "auto";
    int threads = 0;
    bool no_shuffle = false;
    std::vector<std::uint64_t> seeds;
    std::string out_path;
};

void add_common_options(CLI::App& cmd, CommonOptions& opt, bool with_seeds) {
    cmd.add_option("--data", opt.data_path, "DNA record file (label, id, sequence per line)")
        ->required();
    cmd.add_option("--fri", opt.fri_path, "FRI file, one feature_index<TAB>value per line");
    cmd.add_option("--fri-inline", opt.fri_inline, "comma-separated FRI values")
        ->excludes("--fri");
    cmd.add_option("--hidden", opt.hidden, "hidden units")->capture_default_str();
    cmd.add_option("--epochs", opt.epochs, "training epochs")->capture_default_str();
    cmd.add_option("--lr", opt.learning_rate, "learning rate")->capture_default_str();
    cmd.add_option("--init", opt.init, "first-layer initialization")
        ->check(CLI::IsMember({"auto", "standard", "fri"}))
        ->capture_default_str();
    cmd.add_option("--threads", opt.threads, "worker threads (0 = hardware)")->capture_default_str();
    cmd.add_flag("--no-shuffle", opt.no_shuffle, "keep one fixed example order across epochs");
    if (with_seeds) {
        cmd.add_option("--seeds", opt.seeds, "run seeds (default 0..9)");
    }
    cmd.add_option("--out", opt.out_path, "output file (default stdout)");
}

std::optional<iann::FriVector> load_fri(const CommonOptions& opt) {
    if (!opt.fri_path.empty()) return iann::parse_fri_file(slurp(opt.fri_path));
    if (!opt.fri_inline.empty()) return iann::parse_fri_inline(opt.fri_inline);
    return std::nullopt;
}

iann::InitMode parse_init_mode(const std::string& name) {
    if (name == "standard") return iann::InitMode::Standard;
    if (name == "fri") return iann::InitMode::FriBased;
    return iann::InitMode::Auto;
}

void fill_run_params(iann::RunParams& params, const CommonOptions& opt) {
    params.n_hidden = opt.hidden;
    params.epochs = opt.epochs;
    params.learning_rate = opt.learning_rate;
    params.shuffle_each_epoch = !opt.no_shuffle;
    params.init = parse_init_mode(opt.init);
    params.threads = opt.threads;
    if (!opt.seeds.empty()) params.seeds = opt.seeds;
}

iann::RunLabels labels_for(const CommonOptions& opt) {
    return {opt.data_path, opt.fri_path.empty() ? opt.fri_inline : opt.fri_path};
}

int run_cv(const CommonOptions& opt, int folds) {
    const iann::Dataset dataset = iann::load_dna_dataset_file(opt.data_path);
    iann::CvParams params;
    fill_run_params(params, opt);
    params.folds = folds;
    const iann::EvalReport report =
        iann::run_cross_validation(dataset, load_fri(opt), params, labels_for(opt));
    emit(opt.out_path, iann::report_to_json(report));
    return kExitOk;
}

int run_curve(const CommonOptions& opt, const std::vector<int>& sizes) {
    const iann::Dataset dataset = iann::load_dna_dataset_file(opt.data_path);
    iann::CurveParams params;
    fill_run_params(params, opt);
    params.train_sizes = sizes;
    const iann::CurveReport report =
        iann::run_learning_curve(dataset, load_fri(opt), params, labels_for(opt));
    emit(opt.out_path, iann::curve_to_csv(report));
    return kExitOk;
}

int run_importance(const CommonOptions& opt, std::uint64_t seed) {
    const iann::Dataset dataset = iann::load_dna_dataset_file(opt.data_path);
    const std::optional<iann::FriVector> fri = load_fri(opt);
    if (!fri) throw iann::validation_error("importance reporting requires --fri or --fri-inline");
    iann::RunParams params;
    fill_run_params(params, opt);
    const iann::TrainTrace trace = iann::run_single_training(dataset, fri, params, seed);
    emit(opt.out_path, iann::importance_to_csv(iann::importance_report(trace.final_net, dataset, *fri)));
    return kExitOk;
}

int run_train(const CommonOptions& opt, std::uint64_t seed, const std::string& model_path,
              const std::string& trace_path) {
    const iann::Dataset dataset = iann::load_dna_dataset_file(opt.data_path);
    iann::RunParams params;
    fill_run_params(params, opt);
    const iann::TrainTrace trace = iann::run_single_training(dataset, load_fri(opt), params, seed);
    if (!model_path.empty()) iann::save_network(trace.final_net, model_path);
    emit(trace_path.empty() ? opt.out_path : trace_path, iann::trace_to_csv(trace));
    return kExitOk;
}

int run_fri_from_counts(const std::string& counts_path, const std::string& out_path) {
    const iann::RuleCountTable table = iann::parse_rule_counts_file(slurp(counts_path));
    emit(out_path, iann::emit_fri_file(iann::fri_from_rule_counts(table)));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Importance-aided neural network experiments on DNA benchmarks"};
    app.require_subcommand(1);

    CommonOptions cv_opt;
    int cv_folds = 10;
    CLI::App* cv = app.add_subcommand("cv", "stratified k-fold cross-validation over seeds");
    add_common_options(*cv, cv_opt, true);
    cv->add_option("--folds", cv_folds, "number of folds")->capture_default_str();

    CommonOptions curve_opt;
    std::vector<int> curve_sizes;
    CLI::App* curve = app.add_subcommand("curve", "learning curve over training set sizes");
    add_common_options(*curve, curve_opt, true);
    curve->add_option("--sizes", curve_sizes, "training set sizes")->required();

    CommonOptions imp_opt;
    std::uint64_t imp_seed = 0;
    CLI::App* importance = app.add_subcommand("importance", "train once and report per-position importance");
    add_common_options(*importance, imp_opt, false);
    importance->add_option("--seed", imp_seed, "run seed")->capture_default_str();

    CommonOptions train_opt;
    std::uint64_t train_seed = 0;
    std::string model_path;
    std::string trace_path;
    CLI::App* train_cmd = app.add_subcommand("train", "single training run");
    add_common_options(*train_cmd, train_opt, false);
    train_cmd->add_option("--seed", train_seed, "run seed")->capture_default_str();
    train_cmd->add_option("--model", model_path, "write the trained network as JSON");
    train_cmd->add_option("--trace", trace_path, "write the per-epoch error trace as CSV");

    std::string counts_path;
    std::string counts_out;
    CLI::App* fri_cmd = app.add_subcommand("fri-from-counts", "convert rule-antecedent counts to an FRI file");
    fri_cmd->add_option("--counts", counts_path, "rule count file, feature_index<TAB>count per line")->required();
    fri_cmd->add_option("--out", counts_out, "output FRI file (default stdout)");

    try {
        app.parse(argc, argv);
        if (cv->parsed()) return run_cv(cv_opt, cv_folds);
        if (curve->parsed()) return run_curve(curve_opt, curve_sizes);
        if (importance->parsed()) return run_importance(imp_opt, imp_seed);
        if (train_cmd->parsed()) return run_train(train_opt, train_seed, model_path, trace_path);
        if (fri_cmd->parsed()) return run_fri_from_counts(counts_path, counts_out);
        return kExitOther;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    } catch (const iann::numeric_error& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const iann::parse_error& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return kExitData;
    } catch (const iann::validation_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitOther;
    }
}
