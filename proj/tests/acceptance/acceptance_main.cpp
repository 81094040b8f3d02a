// Acceptance gate: nine go/no-go checks covering gradient correctness, the
// unit-importance equivalence to plain backpropagation, the initialization
// contract, the two DNA reproduction experiments, the learning curve, the
// frozen-feature invariant, and byte-level determinism. One PASS/FAIL line
// per criterion; exit status 0 only when every criterion passes.
//
// The reproduction criteria need the public promoter and splice datasets at
// <data-dir>/promoters.data and <data-dir>/splice.data (see README.md); when
// a file is absent the criterion fails with a message naming it.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "iann/dataset.hpp"
#include "iann/experiment.hpp"
#include "iann/fri.hpp"
#include "iann/importance.hpp"
#include "iann/init.hpp"
#include "iann/network.hpp"
#include "iann/rng.hpp"
#include "iann/train.hpp"
#include "reference_backprop.hpp"
#include "test_util.hpp"

namespace {

namespace fs = std::filesystem;

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt_sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", v);
    return buf;
}

std::string fmt_fix(double v, int prec = 2) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", prec, v);
    return buf;
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const fs::path& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
}

Outcome missing(const fs::path& path) {
    Outcome out;
    out.detail = "dataset file not found: " + path.string() + "; see README.md for how to fetch the public data";
    return out;
}

iann::Topology random_topology(iann::Rng& rng) {
    return {static_cast<int>(rng.uniform_int(2, 6)), static_cast<int>(rng.uniform_int(1, 5)),
            static_cast<int>(rng.uniform_int(1, 3))};
}

std::vector<double*> all_params(iann::Network& net) {
    std::vector<double*> out;
    for (double& w : net.w_in.flat()) out.push_back(&w);
    for (double& w : net.theta_hidden) out.push_back(&w);
    for (double& w : net.w_out.flat()) out.push_back(&w);
    for (double& w : net.theta_out) out.push_back(&w);
    return out;
}

// Criterion 1. One composite update (deltas plus weight step) with learning
// rate 1 and importance 1 moves every parameter by exactly minus the gradient
// of the half-squared error, so the step must match central finite
// differences of that loss computed through the independent reference net.
Outcome composite_gradient_check() {
    iann::Rng rng(101);
    const double h = 1e-5;
    const int cases = 60;
    double worst = 0.0;
    for (int c = 0; c < cases; ++c) {
        const iann::Topology t = random_topology(rng);
        iann::Network net = testutil::random_network(t, rng, 0.7);
        std::vector<double> x(static_cast<std::size_t>(t.n_inputs));
        std::vector<double> target(static_cast<std::size_t>(t.n_outputs));
        for (double& v : x) v = rng.uniform(-1.0, 1.0);
        for (double& v : target) v = rng.uniform_int(0, 1) ? 1.0 : 0.0;

        const auto ones = iann::FriVector::uniform(t.n_inputs, 1.0);
        iann::Network updated = net;
        const iann::Activations acts = iann::forward(updated, x);
        const iann::Deltas deltas = iann::backprop_deltas(updated, acts, target);
        iann::apply_iann_update(updated, deltas, acts, 1.0, ones);

        iann::Network probe = net;
        const auto base_ptrs = all_params(net);
        const auto updated_ptrs = all_params(updated);
        const auto probe_ptrs = all_params(probe);

        double num_inf = 0.0;
        double diff_inf = 0.0;
        for (std::size_t p = 0; p < probe_ptrs.size(); ++p) {
            const double analytic = -(*updated_ptrs[p] - *base_ptrs[p]);
            const double saved = *probe_ptrs[p];
            *probe_ptrs[p] = saved + h;
            const double loss_hi = refnet::ref_half_error(testutil::to_ref(probe), x, target);
            *probe_ptrs[p] = saved - h;
            const double loss_lo = refnet::ref_half_error(testutil::to_ref(probe), x, target);
            *probe_ptrs[p] = saved;
            const double numeric = (loss_hi - loss_lo) / (2.0 * h);
            num_inf = std::max(num_inf, std::abs(numeric));
            diff_inf = std::max(diff_inf, std::abs(numeric - analytic));
        }
        worst = std::max(worst, diff_inf / std::max(num_inf, 1e-12));
    }
    Outcome out;
    out.pass = worst < 1e-6;
    out.detail = std::to_string(cases) + " random nets, worst relative error " + fmt_sci(worst) + ", bound 1e-06";
    return out;
}

// Criterion 2. Analytic input sensitivity dy/dx_k against central finite
// differences of the reference forward pass.
Outcome dependency_gradient_check() {
    iann::Rng rng(202);
    const double h = 1e-5;
    const int cases = 100;
    double worst = 0.0;
    for (int c = 0; c < cases; ++c) {
        const iann::Topology t = random_topology(rng);
        const iann::Network net = testutil::random_network(t, rng, 0.7);
        std::vector<double> x(static_cast<std::size_t>(t.n_inputs));
        for (double& v : x) v = rng.uniform(-1.0, 1.0);

        const iann::DependencyVector dep = iann::dependency_gradient(net, x);
        const refnet::RefNet ref = testutil::to_ref(net);

        double num_inf = 0.0;
        double diff_inf = 0.0;
        for (int k = 0; k < t.n_inputs; ++k) {
            std::vector<double> hi = x;
            std::vector<double> lo = x;
            hi[static_cast<std::size_t>(k)] += h;
            lo[static_cast<std::size_t>(k)] -= h;
            const std::vector<double> out_hi = refnet::ref_forward(ref, hi);
            const std::vector<double> out_lo = refnet::ref_forward(ref, lo);
            for (int y = 0; y < t.n_outputs; ++y) {
                const double numeric = (out_hi[static_cast<std::size_t>(y)] - out_lo[static_cast<std::size_t>(y)]) / (2.0 * h);
                num_inf = std::max(num_inf, std::abs(numeric));
                diff_inf = std::max(diff_inf, std::abs(numeric - dep.d(y, k)));
            }
        }
        worst = std::max(worst, diff_inf / std::max(num_inf, 1e-12));
    }
    Outcome out;
    out.pass = worst < 1e-7;
    out.detail = std::to_string(cases) + " random cases, worst relative error " + fmt_sci(worst) + ", bound 1e-07";
    return out;
}

// Criterion 3. On a 5-4-2 net trained for 10 epochs from one shared
// initialization and example order, the importance-scaled path with
// importance 1 must (a) equal a hand-written plain-backprop update bit for
// bit and (b) track the independently written reference within 1e-12 per
// weight per epoch.
Outcome rule_equivalence() {
    const iann::Topology t{5, 4, 2};
    iann::Rng rng(303);
    iann::Network unit_importance = testutil::random_network(t, rng, 0.5);
    iann::Network plain = unit_importance;
    refnet::RefNet reference = testutil::to_ref(unit_importance);

    const int n_examples = 20;
    std::vector<std::vector<double>> xs;
    std::vector<std::vector<double>> targets;
    for (int i = 0; i < n_examples; ++i) {
        xs.push_back(testutil::random_vector(t.n_inputs, rng, -1.0, 1.0));
        std::vector<double> target(static_cast<std::size_t>(t.n_outputs));
        for (double& v : target) v = rng.uniform_int(0, 1) ? 1.0 : 0.0;
        targets.push_back(std::move(target));
    }

    const auto ones = iann::FriVector::uniform(t.n_inputs, 1.0);
    const double lr = 0.3;
    const int epochs = 10;
    bool bit_identical = true;
    double worst_ref = 0.0;

    for (int epoch = 0; epoch < epochs; ++epoch) {
        for (int i = 0; i < n_examples; ++i) {
            const auto& x = xs[static_cast<std::size_t>(i)];
            const auto& target = targets[static_cast<std::size_t>(i)];

            const iann::Activations acts = iann::forward(unit_importance, x);
            const iann::Deltas deltas = iann::backprop_deltas(unit_importance, acts, target);
            iann::apply_iann_update(unit_importance, deltas, acts, lr, ones);

            // Plain textbook step, no importance factor anywhere.
            const iann::Activations acts_p = iann::forward(plain, x);
            const iann::Deltas deltas_p = iann::backprop_deltas(plain, acts_p, target);
            for (int j = 0; j < t.n_hidden; ++j) {
                const double step = lr * deltas_p.hidden[static_cast<std::size_t>(j)];
                for (int k = 0; k < t.n_inputs; ++k) plain.w_in(j, k) += step * x[static_cast<std::size_t>(k)];
                plain.theta_hidden[static_cast<std::size_t>(j)] += step;
            }
            for (int y = 0; y < t.n_outputs; ++y) {
                const double step = lr * deltas_p.output[static_cast<std::size_t>(y)];
                for (int j = 0; j < t.n_hidden; ++j) plain.w_out(y, j) += step * acts_p.hidden_post[static_cast<std::size_t>(j)];
                plain.theta_out[static_cast<std::size_t>(y)] += step;
            }

            refnet::ref_train_example(reference, x, target, lr);
        }

        iann::Network& a = unit_importance;
        const auto a_ptrs = all_params(a);
        const auto b_ptrs = all_params(plain);
        for (std::size_t p = 0; p < a_ptrs.size(); ++p) {
            if (std::bit_cast<std::uint64_t>(*a_ptrs[p]) != std::bit_cast<std::uint64_t>(*b_ptrs[p])) {
                bit_identical = false;
            }
        }
        for (int j = 0; j < t.n_hidden; ++j) {
            for (int i = 0; i < t.n_inputs; ++i) {
                worst_ref = std::max(worst_ref, std::abs(a.w_in(j, i) - reference.w1[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
            }
            worst_ref = std::max(worst_ref, std::abs(a.theta_hidden[static_cast<std::size_t>(j)] - reference.b1[static_cast<std::size_t>(j)]));
        }
        for (int y = 0; y < t.n_outputs; ++y) {
            for (int j = 0; j < t.n_hidden; ++j) {
                worst_ref = std::max(worst_ref, std::abs(a.w_out(y, j) - reference.w2[static_cast<std::size_t>(j)][static_cast<std::size_t>(y)]));
            }
            worst_ref = std::max(worst_ref, std::abs(a.theta_out[static_cast<std::size_t>(y)] - reference.b2[static_cast<std::size_t>(y)]));
        }
    }

    Outcome out;
    out.pass = bit_identical && worst_ref <= 1e-12;
    out.detail = std::string("plain-update path ") + (bit_identical ? "bit-identical" : "DIVERGED") +
                 ", reference deviation " + fmt_sci(worst_ref) + " over 10 epochs, bound 1e-12";
    return out;
}

// Criterion 4. Importance-based initialization: selected first-layer weights
// sit exactly at +-I_k, unselected ones inside [-0.5, 0.5], and over 1e5
// hidden units the mean |w| of an importance-0.9 feature exceeds that of an
// importance-0.3 feature by more than 0.05.
Outcome init_properties() {
    const std::vector<double> importances = {0.9, 0.8, 0.75, 0.7, 0.65, 0.6, 0.55, 0.51};
    const auto fri = iann::FriVector::validated(importances);
    const iann::Topology t{static_cast<int>(importances.size()), 2000, 1};
    const iann::Network net = iann::init_iann(t, fri, 404);

    long selected = 0;
    long unselected = 0;
    for (int j = 0; j < t.n_hidden; ++j) {
        for (int k = 0; k < t.n_inputs; ++k) {
            const double w = net.w_in(j, k);
            if (std::abs(w) == importances[static_cast<std::size_t>(k)]) {
                ++selected;
            } else if (w >= -0.5 && w <= 0.5) {
                ++unselected;
            } else {
                Outcome out;
                out.detail = "weight " + fmt_fix(w, 17) + " at (" + std::to_string(j) + "," + std::to_string(k) +
                             ") is neither exactly +-I_k nor inside [-0.5, 0.5]";
                return out;
            }
        }
    }

    const iann::Topology t2{2, 100000, 1};
    const auto fri2 = iann::FriVector::validated({0.9, 0.3});
    const iann::Network net2 = iann::init_iann(t2, fri2, 405);
    double sum_hi = 0.0;
    double sum_lo = 0.0;
    for (int j = 0; j < t2.n_hidden; ++j) {
        sum_hi += std::abs(net2.w_in(j, 0));
        sum_lo += std::abs(net2.w_in(j, 1));
    }
    const double mean_hi = sum_hi / t2.n_hidden;
    const double mean_lo = sum_lo / t2.n_hidden;

    Outcome out;
    out.pass = selected > 0 && unselected > 0 && (mean_hi - mean_lo) > 0.05;
    out.detail = std::to_string(selected) + " selected at exactly +-I_k, " + std::to_string(unselected) +
                 " unselected in range; mean |w| " + fmt_fix(mean_hi, 4) + " (I=0.9) vs " + fmt_fix(mean_lo, 4) +
                 " (I=0.3) over 1e5 units, margin bound 0.05";
    return out;
}

// Reports produced by criterion 5, reused byte-for-byte by criterion 9.
struct StoredReports {
    std::optional<std::string> promoter_iann;
    std::optional<std::string> promoter_baseline;
};

// Criterion 5. Promoter task, 10-fold stratified CV, 23 hidden units, 100
// epochs, rule-derived importance, seeds 0..9: importance-aided accuracy
// within 2.5 points of the published 94.97, baseline within 2.5 points of
// the published 93.45, and importance-aided mean >= baseline mean.
Outcome promoter_reproduction(const fs::path& data_dir, StoredReports& stored) {
    const fs::path data_path = data_dir / "promoters.data";
    const fs::path fri_path = data_dir / "fri" / "promoter.fri";
    if (!fs::exists(data_path)) return missing(data_path);
    if (!fs::exists(fri_path)) return missing(fri_path);

    const iann::Dataset dataset = iann::load_dna_dataset_file(data_path.string());
    const iann::FriVector fri = iann::parse_fri_file(read_file(fri_path));

    const iann::CvParams params;  // 23 hidden, 100 epochs, lr 0.1, 10 folds, seeds 0..9
    const iann::RunLabels aided_labels{data_path.string(), fri_path.string()};
    const iann::RunLabels plain_labels{data_path.string(), ""};

    const iann::EvalReport aided = iann::run_cross_validation(dataset, fri, params, aided_labels);
    const iann::EvalReport baseline = iann::run_cross_validation(dataset, std::nullopt, params, plain_labels);

    stored.promoter_iann = iann::report_to_json(aided);
    stored.promoter_baseline = iann::report_to_json(baseline);
    write_file("acceptance_promoter_iann.json", *stored.promoter_iann);
    write_file("acceptance_promoter_baseline.json", *stored.promoter_baseline);

    const bool aided_in_window = std::abs(aided.mean_accuracy_pct - 94.97) <= 2.5;
    const bool baseline_in_window = std::abs(baseline.mean_accuracy_pct - 93.45) <= 2.5;
    const bool directional = aided.mean_accuracy_pct >= baseline.mean_accuracy_pct;

    Outcome out;
    out.pass = aided_in_window && baseline_in_window && directional;
    out.detail = "importance-aided " + fmt_fix(aided.mean_accuracy_pct) + "% (target 94.97+-2.5), baseline " +
                 fmt_fix(baseline.mean_accuracy_pct) + "% (target 93.45+-2.5), aided >= baseline " +
                 (directional ? "holds" : "FAILS");
    return out;
}

// Criterion 6. Splice task on a seeded 1007-instance subset, 10-fold CV, 24
// hidden units: importance-aided accuracy within 2.5 points of the published
// 94.83 and >= the baseline mean.
Outcome splice_reproduction(const fs::path& data_dir) {
    const fs::path data_path = data_dir / "splice.data";
    const fs::path fri_path = data_dir / "fri" / "splice.fri";
    if (!fs::exists(data_path)) return missing(data_path);
    if (!fs::exists(fri_path)) return missing(fri_path);

    const iann::Dataset full = iann::load_dna_dataset_file(data_path.string());
    const int n = static_cast<int>(full.instances.size());
    if (n < 1007) {
        Outcome out;
        out.detail = "need at least 1007 instances for the seeded subset, found " + std::to_string(n);
        return out;
    }
    std::vector<int> indices(static_cast<std::size_t>(n));
    std::iota(indices.begin(), indices.end(), 0);
    iann::Rng subset_rng(1);
    subset_rng.shuffle(indices);
    indices.resize(1007);
    std::sort(indices.begin(), indices.end());
    const iann::Dataset dataset = iann::subset(full, indices);

    const iann::FriVector fri = iann::parse_fri_file(read_file(fri_path));

    iann::CvParams params;
    params.n_hidden = 24;
    const iann::RunLabels aided_labels{data_path.string(), fri_path.string()};
    const iann::RunLabels plain_labels{data_path.string(), ""};

    const iann::EvalReport aided = iann::run_cross_validation(dataset, fri, params, aided_labels);
    const iann::EvalReport baseline = iann::run_cross_validation(dataset, std::nullopt, params, plain_labels);

    const bool aided_in_window = std::abs(aided.mean_accuracy_pct - 94.83) <= 2.5;
    const bool directional = aided.mean_accuracy_pct >= baseline.mean_accuracy_pct;

    Outcome out;
    out.pass = aided_in_window && directional;
    out.detail = "importance-aided " + fmt_fix(aided.mean_accuracy_pct) + "% (target 94.83+-2.5), baseline " +
                 fmt_fix(baseline.mean_accuracy_pct) + "%, aided >= baseline " + (directional ? "holds" : "FAILS");
    return out;
}

// Criterion 7. Learning curve over the full 3190-instance splice population:
// importance-aided mean error at train size 1000 is at most 7% and no worse
// than at train size 100.
Outcome learning_curve_check(const fs::path& data_dir) {
    const fs::path data_path = data_dir / "splice.data";
    const fs::path fri_path = data_dir / "fri" / "splice.fri";
    if (!fs::exists(data_path)) return missing(data_path);
    if (!fs::exists(fri_path)) return missing(fri_path);

    const iann::Dataset dataset = iann::load_dna_dataset_file(data_path.string());
    const int n = static_cast<int>(dataset.instances.size());
    if (n != 3190) {
        Outcome out;
        out.detail = "expected the full 3190-instance splice dataset, found " + std::to_string(n) + " instances";
        return out;
    }
    const iann::FriVector fri = iann::parse_fri_file(read_file(fri_path));

    iann::CurveParams params;
    params.n_hidden = 24;
    params.train_sizes = {100, 1000};
    const iann::RunLabels labels{data_path.string(), fri_path.string()};
    const iann::CurveReport report = iann::run_learning_curve(dataset, fri, params, labels);

    double err_100 = -1.0;
    double err_1000 = -1.0;
    for (const auto& [size, mean_err] : report.mean_error_by_size) {
        if (size == 100) err_100 = mean_err;
        if (size == 1000) err_1000 = mean_err;
    }

    Outcome out;
    out.pass = err_1000 >= 0.0 && err_100 >= 0.0 && err_1000 <= 7.0 && err_1000 <= err_100;
    out.detail = "mean error " + fmt_fix(err_100) + "% at 100 examples, " + fmt_fix(err_1000) +
                 "% at 1000 (bounds: <= 7.00 and <= error at 100)";
    return out;
}

// Criterion 8. Features whose importance is zero keep bit-identical
// first-layer weights through a full promoter training run.
Outcome frozen_feature_invariant(const fs::path& data_dir) {
    const fs::path data_path = data_dir / "promoters.data";
    const fs::path fri_path = data_dir / "fri" / "promoter.fri";
    if (!fs::exists(data_path)) return missing(data_path);
    if (!fs::exists(fri_path)) return missing(fri_path);

    const iann::Dataset dataset = iann::load_dna_dataset_file(data_path.string());
    const iann::FriVector shipped = iann::parse_fri_file(read_file(fri_path));

    std::vector<double> values = shipped.values();
    for (const int position : {0, 5, 25, static_cast<int>(values.size()) - 1}) {
        values[static_cast<std::size_t>(position)] = 0.0;
    }
    const auto per_position = iann::FriVector::validated(values);
    const iann::FriVector input_fri = dataset.expand_input_fri(per_position);

    const iann::Network start = iann::init_iann(dataset.topology_for(23), input_fri, 42);
    iann::TrainConfig config;  // 100 epochs, lr 0.1
    config.seed = 43;
    const iann::TrainTrace trace = iann::train(start, dataset, config, input_fri);

    long frozen_columns = 0;
    long mismatched_bits = 0;
    bool others_moved = false;
    for (int i = 0; i < dataset.n_inputs(); ++i) {
        if (input_fri[i] == 0.0) {
            ++frozen_columns;
            for (int j = 0; j < start.topology.n_hidden; ++j) {
                if (std::bit_cast<std::uint64_t>(start.w_in(j, i)) !=
                    std::bit_cast<std::uint64_t>(trace.final_net.w_in(j, i))) {
                    ++mismatched_bits;
                }
            }
        } else {
            for (int j = 0; j < start.topology.n_hidden; ++j) {
                if (start.w_in(j, i) != trace.final_net.w_in(j, i)) others_moved = true;
            }
        }
    }

    Outcome out;
    out.pass = frozen_columns > 0 && mismatched_bits == 0 && others_moved;
    out.detail = std::to_string(frozen_columns) + " zero-importance input columns, " + std::to_string(mismatched_bits) +
                 " weights changed bits over 100 epochs";
    return out;
}

// Criterion 9. Rerunning the criterion 5 experiment with the same seed list
// reproduces both report files byte for byte.
Outcome determinism_check(const fs::path& data_dir, const StoredReports& stored) {
    const fs::path data_path = data_dir / "promoters.data";
    const fs::path fri_path = data_dir / "fri" / "promoter.fri";
    if (!fs::exists(data_path)) return missing(data_path);
    if (!fs::exists(fri_path)) return missing(fri_path);
    if (!stored.promoter_iann || !stored.promoter_baseline) {
        Outcome out;
        out.detail = "no stored reports; the promoter reproduction run did not complete";
        return out;
    }

    const iann::Dataset dataset = iann::load_dna_dataset_file(data_path.string());
    const iann::FriVector fri = iann::parse_fri_file(read_file(fri_path));

    const iann::CvParams params;
    const iann::RunLabels aided_labels{data_path.string(), fri_path.string()};
    const iann::RunLabels plain_labels{data_path.string(), ""};

    const std::string aided_rerun = iann::report_to_json(iann::run_cross_validation(dataset, fri, params, aided_labels));
    const std::string baseline_rerun =
        iann::report_to_json(iann::run_cross_validation(dataset, std::nullopt, params, plain_labels));
    write_file("acceptance_promoter_iann_rerun.json", aided_rerun);
    write_file("acceptance_promoter_baseline_rerun.json", baseline_rerun);

    const std::string first_aided = read_file("acceptance_promoter_iann.json");
    const std::string first_baseline = read_file("acceptance_promoter_baseline.json");
    const std::string second_aided = read_file("acceptance_promoter_iann_rerun.json");
    const std::string second_baseline = read_file("acceptance_promoter_baseline_rerun.json");

    const bool aided_equal = first_aided == second_aided;
    const bool baseline_equal = first_baseline == second_baseline;

    Outcome out;
    out.pass = aided_equal && baseline_equal;
    out.detail = std::string("importance-aided report ") + (aided_equal ? "byte-identical" : "DIFFERS") +
                 " (" + std::to_string(first_aided.size()) + " bytes), baseline report " +
                 (baseline_equal ? "byte-identical" : "DIFFERS") + " (" + std::to_string(first_baseline.size()) +
                 " bytes)";
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    fs::path data_dir = "data";
    for (int i = 1; i < argc; ++i) {
        const std::string_view arg = argv[i];
        if (arg == "--data-dir" && i + 1 < argc) {
            data_dir = argv[++i];
        } else if (arg.rfind("--data-dir=", 0) == 0) {
            data_dir = std::string(arg.substr(11));
        } else {
            std::cerr << "usage: iann_acceptance [--data-dir DIR]\n";
            return 2;
        }
    }

    StoredReports stored;
    int failures = 0;
    const auto run = [&](int number, const std::string& title, const std::function<Outcome()>& fn) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = fn();
        } catch (const std::exception& e) {
            out.pass = false;
            out.detail = e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << (out.pass ? "PASS" : "FAIL") << "  " << number << "  " << title;
        if (!out.detail.empty()) std::cout << " (" << out.detail << ")";
        std::cout << "  [" << fmt_fix(secs, 1) << "s]" << std::endl;
        if (!out.pass) ++failures;
    };

    run(1, "composite update with unit importance matches finite differences", composite_gradient_check);
    run(2, "dependency gradient matches finite differences", dependency_gradient_check);
    run(3, "unit-importance training equals plain backprop and the independent reference", rule_equivalence);
    run(4, "importance-based initialization places weights as specified", init_properties);
    run(5, "promoter cross-validation reproduces the published accuracies",
        [&] { return promoter_reproduction(data_dir, stored); });
    run(6, "splice cross-validation on the seeded 1007-instance subset",
        [&] { return splice_reproduction(data_dir); });
    run(7, "learning curve error on the full splice population", [&] { return learning_curve_check(data_dir); });
    run(8, "zero-importance features stay bit-identical through training",
        [&] { return frozen_feature_invariant(data_dir); });
    run(9, "promoter reports are byte-identical across reruns", [&] { return determinism_check(data_dir, stored); });

    if (failures == 0) {
        std::cout << "all 9 criteria passed" << std::endl;
        return 0;
    }
    std::cout << failures << " of 9 criteria failed" << std::endl;
    return 1;
}
