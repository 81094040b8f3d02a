#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "iann/errors.hpp"

namespace iann {

/// Feature relative importance: one expert-supplied weight per feature, each
/// in [0,1]. Importance values carry meaning only as ratios between features,
/// never as absolutes, so nothing in the library interprets a single value in
/// isolation; they enter only the first-layer initialization and the
/// first-layer update scaling.
///
/// Construction always validates, so a live FriVector satisfies the range
/// invariant by definition.
class FriVector {
public:
    /// Validates every entry into [0,1]; throws validation_error naming the
    /// first offending index otherwise.
    static FriVector validated(std::vector<double> values);

    /// n copies of the same value; uniform(n) is the "no knowledge" vector
    /// that reduces importance-scaled training to plain backpropagation.
    static FriVector uniform(int n, double value = 1.0);

    int size() const { return static_cast<int>(values_.size()); }
    double operator[](int k) const { return values_[k]; }
    const std::vector<double>& values() const { return values_; }

    bool operator==(const FriVector&) const = default;

private:
    explicit FriVector(std::vector<double> v) : values_(std::move(v)) {}
    std::vector<double> values_;
};

/// Free-function spelling of FriVector::validated.
FriVector validate_fri(std::vector<double> raw);

/// Per-feature count of domain-theory rules in which the feature appears as
/// an antecedent.
struct RuleCountTable {
    std::vector<int> counts;

    /// Throws validation_error if empty or any count is negative.
    void validate() const;
};

/// Converts rule-antecedent counts to importance values.
///
/// Features mentioned in no rule get the low base value 0.3. Features with
/// positive counts are ranked by descending count and the distinct count
/// values are assigned 0.9, 0.8, 0.7, ... in rank order; equal counts share a
/// value. The ladder is floored at 0.4, so for rule sets with more than six
/// distinct counts the lowest-ranked mentioned features saturate there, still
/// strictly above the unmentioned base.
FriVector fri_from_rule_counts(const RuleCountTable& table);

/// Text format shared by FRI files and rule-count files: one
/// "feature_index<TAB>value" pair per line, '#' starts a comment, blank lines
/// ignored. Indices must cover 0..n-1 exactly once, in any order.
FriVector parse_fri_file(std::string_view text);
std::string emit_fri_file(const FriVector& fri);

RuleCountTable parse_rule_counts_file(std::string_view text);

/// Inline CLI form: comma-separated values, position implied by order.
FriVector parse_fri_inline(std::string_view csv);

}  // namespace iann
