#pragma once

#include <optional>
#include <span>
#include <vector>

#include "iann/fri.hpp"
#include "iann/network.hpp"

namespace iann {

/// Partial derivatives of each output with respect to each input, at one
/// input point: d(y, k) = dy/dx_k.
struct DependencyVector {
    Matrix d;  // n_outputs x n_inputs
};

/// Analytic network sensitivity at x:
///   dy/dx_k = sigma'(output_pre_y) * sum_j w_out(y,j) * w_in(j,k) * sigma'(hidden_pre_j)
/// computed from a single forward pass. A diagnostic only; nothing in the
/// training path uses it.
DependencyVector dependency_gradient(const Network& net, std::span<const double> x);

/// Per-input average absolute first-layer weight, (1/n_hidden) sum_j |w_in(j,k)|:
/// the weight-based proxy for how important a trained network considers each
/// input.
struct EmpiricalImportance {
    std::vector<double> avg_abs_weight;
};

EmpiricalImportance empirical_importance(const Network& net);

/// Spearman rank correlation with average ranks for ties. Returns nullopt
/// when either side has zero rank variance (constant vector), where the
/// correlation is undefined.
std::optional<double> spearman(std::span<const double> a, std::span<const double> b);

/// Rank agreement between supplied importance values and the trained
/// network's average absolute first-layer weights. Rank-based on purpose:
/// importance values carry meaning as an ordering, not as absolutes.
std::optional<double> fri_agreement(const Network& net, const FriVector& input_fri);

}  // namespace iann
