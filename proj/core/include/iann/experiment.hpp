#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "iann/dataset.hpp"
#include "iann/fri.hpp"
#include "iann/train.hpp"

namespace iann {

/// First-layer initialization choice. Auto resolves to FriBased when an FRI
/// vector is supplied and Standard otherwise; forcing Standard together with
/// an FRI isolates the update rule from the initialization.
enum class InitMode { Auto, Standard, FriBased };

/// Knobs shared by every experiment mode.
///
/// Seed discipline: for a run seed s, the fold plan (or curve split) uses s
/// directly; each trained network draws its initialization from
/// seed_mix(s, unit, 1) and its example shuffling from seed_mix(s, unit, 2),
/// where unit is the fold index (cross-validation) or train size (curves).
/// Workers never share RNG streams, so results are identical for any thread
/// count.
struct RunParams {
    int n_hidden = 23;
    int epochs = 100;
    double learning_rate = 0.1;
    bool shuffle_each_epoch = true;
    std::vector<std::uint64_t> seeds = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
    InitMode init = InitMode::Auto;
    int threads = 0;  // <= 0 means hardware concurrency

    void validate() const;
};

struct CvParams : RunParams {
    int folds = 10;
};

struct CurveParams : RunParams {
    std::vector<int> train_sizes;
};

/// File provenance echoed into reports; empty strings for in-memory runs.
struct RunLabels {
    std::string data_path;
    std::string fri_path;
};

struct FoldResult {
    std::uint64_t seed;
    int fold;
    int test_size;
    int correct;
    double accuracy_pct;
};

/// Published accuracy figure attached to reports for side-by-side reading;
/// never produced by this code.
struct PublishedFigure {
    std::string learner;
    double accuracy_pct;
};

struct EvalReport {
    CvParams params;
    RunLabels labels;
    bool used_fri = false;
    std::string init_used;  // "standard" or "fri"

    int n_instances = 0;
    int positions = 0;
    std::vector<std::string> class_names;
    std::vector<int> class_counts;

    std::vector<FoldResult> folds;  // ordered by (seed, fold)
    std::vector<double> per_seed_mean_pct;
    double mean_accuracy_pct = 0.0;
    double stddev_accuracy_pct = 0.0;  // sample stddev across per-seed means
    std::vector<std::vector<long>> confusion;  // [true class][predicted], pooled

    std::vector<PublishedFigure> published;
};

/// Stratified k-fold cross-validation over every seed in params.seeds. With
/// an FRI vector this is the importance-aided run; without one it is the
/// plain-backpropagation baseline (identical code path with importance
/// frozen at 1).
EvalReport run_cross_validation(const Dataset& dataset, const std::optional<FriVector>& per_position_fri,
                                const CvParams& params, const RunLabels& labels = {});

std::string report_to_json(const EvalReport& report);

struct CurvePoint {
    int train_size;
    std::uint64_t seed;
    double error_pct;
};

struct CurveReport {
    CurveParams params;
    RunLabels labels;
    bool used_fri = false;
    std::string init_used;
    std::vector<CurvePoint> points;  // ordered by (size, seed)
    std::vector<std::pair<int, double>> mean_error_by_size;
};

/// Learning-curve experiment: per (train size, seed), a seeded random
/// train/test split of the full dataset, one training run, test error.
CurveReport run_learning_curve(const Dataset& dataset, const std::optional<FriVector>& per_position_fri,
                               const CurveParams& params, const RunLabels& labels = {});

/// "train_size,seed,error_pct" rows, ordered by (size, seed).
std::string curve_to_csv(const CurveReport& report);

struct ImportanceRow {
    int position;
    double fri;
    double avg_abs_weight;       // mean over the position's encoded inputs
    double dependency_mean_abs;  // mean |dy/dx| over dataset, outputs, and the position's inputs
};

struct ImportanceReport {
    std::vector<ImportanceRow> rows;          // one per position
    std::optional<double> agreement;          // rank agreement, nullopt when undefined
};

/// Per-position diagnostics of a trained model against its FRI vector.
ImportanceReport importance_report(const Network& net, const Dataset& dataset, const FriVector& per_position_fri);

/// CSV with a '#' summary header line carrying the rank agreement.
std::string importance_to_csv(const ImportanceReport& report);

/// Single training run: builds the topology from the dataset, initializes per
/// InitMode, trains, returns the trace (with final network inside).
TrainTrace run_single_training(const Dataset& dataset, const std::optional<FriVector>& per_position_fri,
                               const RunParams& params, std::uint64_t seed);

}  // namespace iann
