#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "iann/fri.hpp"
#include "iann/network.hpp"

namespace iann {

/// One record of a comma-separated DNA file: "label, id, sequence".
struct RawInstance {
    std::string label;
    std::string id;
    std::string sequence;  // uppercased, whitespace stripped
};

/// Parses the comma-separated record layout used by the published DNA
/// benchmark files. Whitespace inside sequences is stripped and letters
/// uppercased; labels and ids are trimmed. All sequences must share one
/// length.
std::vector<RawInstance> parse_dna_dataset(std::string_view text);

/// An encoded instance: real input vector plus class index.
struct Instance {
    std::vector<double> x;
    int label = 0;
};

/// Encoded dataset, immutable after construction and safe to share across
/// threads.
///
/// positions is the raw feature count before encoding (sequence positions for
/// DNA data). x vectors all share one length, a multiple of positions; for
/// DNA data that length is 4 * positions.
struct Dataset {
    std::vector<Instance> instances;
    std::vector<std::string> class_names;  // ordered by first appearance
    int positions = 0;
    std::string encoding;

    int n_inputs() const { return instances.empty() ? 0 : static_cast<int>(instances.front().x.size()); }
    int n_classes() const { return static_cast<int>(class_names.size()); }

    /// Output units used for this dataset: one for two classes, else one per class.
    int n_outputs() const { return n_classes() <= 2 ? 1 : n_classes(); }

    std::vector<int> class_counts() const;

    /// Throws validation_error on ragged inputs, out-of-range labels, or an
    /// input length not divisible by positions.
    void validate() const;

    /// Replicates a per-position FRI vector across each position's encoded
    /// inputs (factor n_inputs / positions; 4 for one-hot DNA).
    FriVector expand_input_fri(const FriVector& per_position) const;

    Topology topology_for(int n_hidden) const { return {n_inputs(), n_hidden, n_outputs()}; }
};

/// One-hot encoding of a nucleotide sequence, 4 inputs per position in the
/// fixed alphabet order A, C, G, T. Ambiguity codes spread fractional mass
/// over their candidate bases (N: all four at 1/4; D = A/G/T at 1/3;
/// S = C/G and R = A/G at 1/2), so every 4-block sums to 1. Any other
/// character is an error naming the position.
std::vector<double> one_hot_encode(std::string_view sequence);

/// Inverse of one_hot_encode for unambiguous sequences: per-block argmax,
/// ties to the alphabetically first base.
std::string decode_sequence(std::span<const double> x);

/// Encodes parsed records into a Dataset; class names ordered by first
/// appearance.
Dataset encode_dna_dataset(const std::vector<RawInstance>& records);

/// Target vector for a class index: a single 0/1 entry when n_outputs is 1,
/// otherwise one-hot.
std::vector<double> target_vector(int class_index, int n_outputs);

/// Replicates per-position FRI into 4-wide one-hot blocks.
FriVector expand_fri(const FriVector& per_position);

/// Index sets of a data split. For k-fold plans every fold serves once as the
/// test set; for learning-curve plans there are exactly two sets,
/// {train, test}. Folds are disjoint and cover the dataset.
struct SplitPlan {
    std::vector<std::vector<int>> folds;
    std::uint64_t seed = 0;
};

/// Seeded stratified k-fold split. Fold sizes differ by at most one overall
/// and per class. Requires 2 <= k <= n; except for the leave-one-out
/// degenerate k == n, every class must have at least k instances so each fold
/// sees every class.
SplitPlan stratified_kfold(const Dataset& dataset, int k, std::uint64_t seed);

/// Seeded uniform sample without replacement of train_size instances; the
/// complement is the test set. folds = {train, test}.
SplitPlan learning_curve_split(const Dataset& dataset, int train_size, std::uint64_t seed);

/// New dataset holding the given instances (metadata shared).
Dataset subset(const Dataset& dataset, std::span<const int> indices);

/// Canonical JSON dump of an encoded dataset, for caching; round-trips
/// exactly.
std::string dataset_to_json(const Dataset& dataset);
Dataset dataset_from_json(std::string_view json_text);

/// Loads and encodes a DNA record file from disk (parse + encode + validate).
Dataset load_dna_dataset_file(const std::string& path);

}  // namespace iann
