#include "iann/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <utility>

#include <nlohmann/json.hpp>

#include "iann/errors.hpp"
#include "iann/importance.hpp"
#include "iann/init.hpp"
#include "iann/rng.hpp"
#include "text_util.hpp"

namespace iann {

namespace {

using nlohmann::json;

// Stream tags for seed_mix(seed, unit, tag); keeping initialization and
// shuffling on separate streams means either can be replayed alone.
constexpr std::uint64_t kInitStream = 1;
constexpr std::uint64_t kShuffleStream = 2;

int resolve_threads(int requested, int n_tasks) {
    int t = requested > 0 ? requested : static_cast<int>(std::thread::hardware_concurrency());
    t = std::max(t, 1);
    return std::min(t, std::max(n_tasks, 1));
}

/// Runs fn(0) .. fn(n_tasks - 1), possibly across worker threads. Tasks must
/// not depend on execution order. The first exception thrown by any task is
/// rethrown here after all workers stop.
void parallel_for(int n_tasks, int threads, const std::function<void(int)>& fn) {
    if (threads <= 1 || n_tasks <= 1) {
        for (int task = 0; task < n_tasks; ++task) fn(task);
        return;
    }
    std::atomic<int> next{0};
    std::mutex error_mutex;
    std::exception_ptr first_error;
    auto worker = [&] {
        while (true) {
            const int task = next.fetch_add(1);
            if (task >= n_tasks) return;
            try {
                fn(task);
            } catch (...) {
                {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                }
                next.store(n_tasks);
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

struct Setup {
    bool used_fri;
    bool fri_init;
    FriVector input_fri;  // expanded to encoded inputs; all ones when no FRI was given
};

Setup resolve_setup(const Dataset& dataset, const std::optional<FriVector>& per_position_fri, InitMode mode) {
    const bool used_fri = per_position_fri.has_value();
    if (mode == InitMode::FriBased && !used_fri) {
        throw validation_error("importance-based initialization requires an FRI vector");
    }
    const bool fri_init = mode == InitMode::FriBased || (mode == InitMode::Auto && used_fri);
    FriVector input =
        used_fri ? dataset.expand_input_fri(*per_position_fri) : FriVector::uniform(dataset.n_inputs());
    return Setup{used_fri, fri_init, std::move(input)};
}

Network make_network(const Topology& topology, const Setup& setup, std::uint64_t seed) {
    return setup.fri_init ? init_iann(topology, setup.input_fri, seed) : init_standard(topology, seed);
}

struct ScoredRun {
    int test_size = 0;
    int correct = 0;
    std::vector<std::vector<long>> confusion;  // [true class][predicted class]
};

ScoredRun train_and_score(const Dataset& dataset, const Setup& setup, const RunParams& params,
                          std::span<const int> train_idx, std::span<const int> test_idx, std::uint64_t init_seed,
                          std::uint64_t shuffle_seed) {
    const Dataset train_set = subset(dataset, train_idx);
    Network net = make_network(dataset.topology_for(params.n_hidden), setup, init_seed);
    TrainConfig config;
    config.learning_rate = params.learning_rate;
    config.epochs = params.epochs;
    config.seed = shuffle_seed;
    config.shuffle_each_epoch = params.shuffle_each_epoch;
    const TrainTrace trace = train(std::move(net), train_set, config, setup.input_fri);

    ScoredRun run;
    run.test_size = static_cast<int>(test_idx.size());
    run.confusion.assign(static_cast<std::size_t>(dataset.n_classes()),
                         std::vector<long>(static_cast<std::size_t>(dataset.n_classes()), 0));
    for (const int idx : test_idx) {
        const Instance& inst = dataset.instances[static_cast<std::size_t>(idx)];
        const int predicted = predict(trace.final_net, inst.x);
        run.confusion[static_cast<std::size_t>(inst.label)][static_cast<std::size_t>(predicted)] += 1;
        if (predicted == inst.label) run.correct += 1;
    }
    return run;
}

/// Accuracy figures published for the two DNA benchmarks, recognized by
/// dataset shape. Context for readers of the reports, never a product of this
/// code.
std::vector<PublishedFigure> published_figures(const Dataset& dataset) {
    if (dataset.positions == 57 && dataset.n_classes() == 2) {
        return {{"iann", 94.97},  {"backpropagation", 93.45},    {"kbann", 93.70},
                {"c4.5", 89.95},  {"nearest_neighbor_k3", 90.49}, {"svm", 89.74}};
    }
    if (dataset.positions == 60 && dataset.n_classes() == 3) {
        return {{"iann", 94.83},  {"backpropagation", 93.23},     {"kbann", 93.68},
                {"c4.5", 90.86},  {"nearest_neighbor_k20", 87.28}, {"svm", 88.77}};
    }
    return {};
}

double mean_of(const std::vector<double>& v) {
    double sum = 0.0;
    for (const double x : v) sum += x;
    return sum / static_cast<double>(v.size());
}

double sample_stddev(const std::vector<double>& v, double mean) {
    if (v.size() < 2) return 0.0;
    double ss = 0.0;
    for (const double x : v) ss += (x - mean) * (x - mean);
    return std::sqrt(ss / static_cast<double>(v.size() - 1));
}

}  // namespace

void RunParams::validate() const {
    if (n_hidden < 1) throw validation_error("hidden unit count must be positive");
    if (epochs < 1) throw validation_error("epoch count must be positive");
    if (!std::isfinite(learning_rate) || learning_rate <= 0.0) {
        throw validation_error("learning rate must be positive and finite");
    }
    if (seeds.empty()) throw validation_error("at least one seed is required");
}

EvalReport run_cross_validation(const Dataset& dataset, const std::optional<FriVector>& per_position_fri,
                                const CvParams& params, const RunLabels& labels) {
    params.validate();
    dataset.validate();
    const Setup setup = resolve_setup(dataset, per_position_fri, params.init);

    const int n_seeds = static_cast<int>(params.seeds.size());
    const int k = params.folds;

    std::vector<SplitPlan> plans;
    plans.reserve(static_cast<std::size_t>(n_seeds));
    for (const std::uint64_t seed : params.seeds) plans.push_back(stratified_kfold(dataset, k, seed));

    const int n_tasks = n_seeds * k;
    std::vector<ScoredRun> runs(static_cast<std::size_t>(n_tasks));
    parallel_for(n_tasks, resolve_threads(params.threads, n_tasks), [&](int task) {
        const int si = task / k;
        const int fold = task % k;
        const std::uint64_t seed = params.seeds[static_cast<std::size_t>(si)];
        const SplitPlan& plan = plans[static_cast<std::size_t>(si)];
        std::vector<int> train_idx;
        train_idx.reserve(dataset.instances.size() - plan.folds[static_cast<std::size_t>(fold)].size());
        for (int f = 0; f < k; ++f) {
            if (f == fold) continue;
            const std::vector<int>& part = plan.folds[static_cast<std::size_t>(f)];
            train_idx.insert(train_idx.end(), part.begin(), part.end());
        }
        runs[static_cast<std::size_t>(task)] =
            train_and_score(dataset, setup, params, train_idx, plan.folds[static_cast<std::size_t>(fold)],
                            seed_mix(seed, static_cast<std::uint64_t>(fold), kInitStream),
                            seed_mix(seed, static_cast<std::uint64_t>(fold), kShuffleStream));
    });

    EvalReport report;
    report.params = params;
    report.labels = labels;
    report.used_fri = setup.used_fri;
    report.init_used = setup.fri_init ? "fri" : "standard";
    report.n_instances = static_cast<int>(dataset.instances.size());
    report.positions = dataset.positions;
    report.class_names = dataset.class_names;
    report.class_counts = dataset.class_counts();
    const std::size_t n_classes = static_cast<std::size_t>(dataset.n_classes());
    report.confusion.assign(n_classes, std::vector<long>(n_classes, 0));

    for (int si = 0; si < n_seeds; ++si) {
        double acc_sum = 0.0;
        for (int fold = 0; fold < k; ++fold) {
            const ScoredRun& run = runs[static_cast<std::size_t>(si * k + fold)];
            const double accuracy_pct = 100.0 * run.correct / run.test_size;
            report.folds.push_back(
                {params.seeds[static_cast<std::size_t>(si)], fold, run.test_size, run.correct, accuracy_pct});
            acc_sum += accuracy_pct;
            for (std::size_t t = 0; t < n_classes; ++t) {
                for (std::size_t p = 0; p < n_classes; ++p) report.confusion[t][p] += run.confusion[t][p];
            }
        }
        report.per_seed_mean_pct.push_back(acc_sum / k);
    }
    report.mean_accuracy_pct = mean_of(report.per_seed_mean_pct);
    report.stddev_accuracy_pct = sample_stddev(report.per_seed_mean_pct, report.mean_accuracy_pct);
    report.published = published_figures(dataset);
    return report;
}

std::string report_to_json(const EvalReport& report) {
    json j;
    j["mode"] = "cross_validation";
    j["config"] = {
        {"data_path", report.labels.data_path},
        {"fri_path", report.labels.fri_path},
        {"algorithm", report.used_fri ? "iann" : "backprop"},
        {"init", report.init_used},
        {"hidden_units", report.params.n_hidden},
        {"epochs", report.params.epochs},
        {"learning_rate", report.params.learning_rate},
        {"shuffle_each_epoch", report.params.shuffle_each_epoch},
        {"folds", report.params.folds},
        {"seeds", report.params.seeds},
    };
    j["dataset"] = {
        {"instances", report.n_instances},
        {"positions", report.positions},
        {"classes", report.class_names},
        {"class_counts", report.class_counts},
    };
    json folds = json::array();
    for (const FoldResult& f : report.folds) {
        folds.push_back({{"seed", f.seed},
                         {"fold", f.fold},
                         {"test_size", f.test_size},
                         {"correct", f.correct},
                         {"accuracy_pct", f.accuracy_pct}});
    }
    j["folds"] = std::move(folds);
    j["per_seed_mean_pct"] = report.per_seed_mean_pct;
    j["mean_accuracy_pct"] = report.mean_accuracy_pct;
    j["stddev_accuracy_pct"] = report.stddev_accuracy_pct;
    j["confusion"] = report.confusion;
    if (!report.published.empty()) {
        json figures;
        for (const PublishedFigure& p : report.published) figures[p.learner] = p.accuracy_pct;
        j["published_reference"] = {
            {"note", "published benchmark figures for this dataset shape, not produced by this run"},
            {"accuracy_pct", std::move(figures)},
        };
    }
    return j.dump(2) + "\n";
}

CurveReport run_learning_curve(const Dataset& dataset, const std::optional<FriVector>& per_position_fri,
                               const CurveParams& params, const RunLabels& labels) {
    params.validate();
    dataset.validate();
    const int n = static_cast<int>(dataset.instances.size());
    if (params.train_sizes.empty()) throw validation_error("learning curve needs at least one train size");
    for (const int size : params.train_sizes) {
        if (size < 1 || size >= n) {
            throw validation_error("train size " + std::to_string(size) + " out of range for " + std::to_string(n) +
                                   " instances");
        }
    }
    const Setup setup = resolve_setup(dataset, per_position_fri, params.init);

    const int n_sizes = static_cast<int>(params.train_sizes.size());
    const int n_seeds = static_cast<int>(params.seeds.size());
    const int n_tasks = n_sizes * n_seeds;
    std::vector<CurvePoint> points(static_cast<std::size_t>(n_tasks));
    parallel_for(n_tasks, resolve_threads(params.threads, n_tasks), [&](int task) {
        const int si = task / n_seeds;
        const int vi = task % n_seeds;
        const int size = params.train_sizes[static_cast<std::size_t>(si)];
        const std::uint64_t seed = params.seeds[static_cast<std::size_t>(vi)];
        const SplitPlan plan = learning_curve_split(dataset, size, seed);
        const ScoredRun run =
            train_and_score(dataset, setup, params, plan.folds[0], plan.folds[1],
                            seed_mix(seed, static_cast<std::uint64_t>(size), kInitStream),
                            seed_mix(seed, static_cast<std::uint64_t>(size), kShuffleStream));
        points[static_cast<std::size_t>(task)] = {size, seed, 100.0 * (run.test_size - run.correct) / run.test_size};
    });

    CurveReport report;
    report.params = params;
    report.labels = labels;
    report.used_fri = setup.used_fri;
    report.init_used = setup.fri_init ? "fri" : "standard";
    report.points = std::move(points);
    for (int si = 0; si < n_sizes; ++si) {
        double err_sum = 0.0;
        for (int vi = 0; vi < n_seeds; ++vi) {
            err_sum += report.points[static_cast<std::size_t>(si * n_seeds + vi)].error_pct;
        }
        report.mean_error_by_size.emplace_back(params.train_sizes[static_cast<std::size_t>(si)], err_sum / n_seeds);
    }
    return report;
}

std::string curve_to_csv(const CurveReport& report) {
    std::string out = "train_size,seed,error_pct\n";
    for (const CurvePoint& p : report.points) {
        out += std::to_string(p.train_size);
        out += ',';
        out += std::to_string(p.seed);
        out += ',';
        out += detail::format_double(p.error_pct);
        out += '\n';
    }
    return out;
}

ImportanceReport importance_report(const Network& net, const Dataset& dataset, const FriVector& per_position_fri) {
    dataset.validate();
    if (dataset.instances.empty()) throw validation_error("importance report needs a non-empty dataset");
    const FriVector input_fri = dataset.expand_input_fri(per_position_fri);
    const int n_inputs = dataset.n_inputs();
    if (net.topology.n_inputs != n_inputs) {
        throw validation_error("network expects " + std::to_string(net.topology.n_inputs) +
                               " inputs, dataset provides " + std::to_string(n_inputs));
    }
    const int factor = n_inputs / dataset.positions;

    const EmpiricalImportance emp = empirical_importance(net);

    std::vector<double> dep(static_cast<std::size_t>(n_inputs), 0.0);
    for (const Instance& inst : dataset.instances) {
        const DependencyVector grad = dependency_gradient(net, inst.x);
        for (int y = 0; y < net.topology.n_outputs; ++y) {
            for (int i = 0; i < n_inputs; ++i) dep[static_cast<std::size_t>(i)] += std::abs(grad.d(y, i));
        }
    }
    const double denom = static_cast<double>(dataset.instances.size()) * net.topology.n_outputs;
    for (double& v : dep) v /= denom;

    ImportanceReport report;
    report.rows.reserve(static_cast<std::size_t>(dataset.positions));
    for (int p = 0; p < dataset.positions; ++p) {
        double w_sum = 0.0;
        double d_sum = 0.0;
        for (int i = p * factor; i < (p + 1) * factor; ++i) {
            w_sum += emp.avg_abs_weight[static_cast<std::size_t>(i)];
            d_sum += dep[static_cast<std::size_t>(i)];
        }
        report.rows.push_back({p, per_position_fri[p], w_sum / factor, d_sum / factor});
    }
    report.agreement = fri_agreement(net, input_fri);
    return report;
}

std::string importance_to_csv(const ImportanceReport& report) {
    std::string out = "# fri_agreement ";
    out += report.agreement ? detail::format_double(*report.agreement) : std::string("undefined");
    out += "\nposition,fri,avg_abs_weight,dependency_mean_abs\n";
    for (const ImportanceRow& row : report.rows) {
        out += std::to_string(row.position);
        out += ',';
        out += detail::format_double(row.fri);
        out += ',';
        out += detail::format_double(row.avg_abs_weight);
        out += ',';
        out += detail::format_double(row.dependency_mean_abs);
        out += '\n';
    }
    return out;
}

TrainTrace run_single_training(const Dataset& dataset, const std::optional<FriVector>& per_position_fri,
                               const RunParams& params, std::uint64_t seed) {
    params.validate();
    dataset.validate();
    const Setup setup = resolve_setup(dataset, per_position_fri, params.init);
    Network net = make_network(dataset.topology_for(params.n_hidden), setup, seed_mix(seed, 0, kInitStream));
    TrainConfig config;
    config.learning_rate = params.learning_rate;
    config.epochs = params.epochs;
    config.seed = seed_mix(seed, 0, kShuffleStream);
    config.shuffle_each_epoch = params.shuffle_each_epoch;
    return train(std::move(net), dataset, config, setup.input_fri);
}

}  // namespace iann
