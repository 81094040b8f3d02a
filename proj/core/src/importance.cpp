#include "iann/importance.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace iann {

DependencyVector dependency_gradient(const Network& net, std::span<const double> x) {
    const auto& t = net.topology;
    const auto acts = forward(net, x);

    // sigma' factors from the already-squashed activations.
    std::vector<double> hidden_dsig(static_cast<std::size_t>(t.n_hidden));
    for (int j = 0; j < t.n_hidden; ++j) {
        hidden_dsig[static_cast<std::size_t>(j)] = sigmoid_deriv_from_post(acts.hidden_post[static_cast<std::size_t>(j)]);
    }

    DependencyVector dep;
    dep.d = Matrix(t.n_outputs, t.n_inputs);
    for (int y = 0; y < t.n_outputs; ++y) {
        const double out_dsig = sigmoid_deriv_from_post(acts.output_post[static_cast<std::size_t>(y)]);
        auto out_row = dep.d.row(y);
        for (int j = 0; j < t.n_hidden; ++j) {
            const double chain = out_dsig * net.w_out(y, j) * hidden_dsig[static_cast<std::size_t>(j)];
            const auto w = net.w_in.row(j);
            for (int k = 0; k < t.n_inputs; ++k) out_row[k] += chain * w[k];
        }
    }
    return dep;
}

EmpiricalImportance empirical_importance(const Network& net) {
    const auto& t = net.topology;
    EmpiricalImportance imp;
    imp.avg_abs_weight.assign(static_cast<std::size_t>(t.n_inputs), 0.0);
    for (int j = 0; j < t.n_hidden; ++j) {
        const auto w = net.w_in.row(j);
        for (int k = 0; k < t.n_inputs; ++k) imp.avg_abs_weight[static_cast<std::size_t>(k)] += std::abs(w[k]);
    }
    for (double& v : imp.avg_abs_weight) v /= static_cast<double>(t.n_hidden);
    return imp;
}

namespace {

// Average ranks, 1-based; ties share the mean of their rank block.
std::vector<double> average_ranks(std::span<const double> values) {
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

    std::vector<double> ranks(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
        const double shared = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = shared;
        i = j + 1;
    }
    return ranks;
}

}  // namespace

std::optional<double> spearman(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw validation_error("spearman: length mismatch");
    if (a.size() < 2) return std::nullopt;

    const auto ra = average_ranks(a);
    const auto rb = average_ranks(b);
    const double n = static_cast<double>(a.size());
    const double mean = (n + 1.0) / 2.0;

    double cov = 0.0, var_a = 0.0, var_b = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double da = ra[i] - mean;
        const double db = rb[i] - mean;
        cov += da * db;
        var_a += da * da;
        var_b += db * db;
    }
    if (var_a == 0.0 || var_b == 0.0) return std::nullopt;
    return cov / std::sqrt(var_a * var_b);
}

std::optional<double> fri_agreement(const Network& net, const FriVector& input_fri) {
    if (input_fri.size() != net.topology.n_inputs) {
        throw validation_error("fri_agreement: FRI has " + std::to_string(input_fri.size()) +
                               " entries, network has " + std::to_string(net.topology.n_inputs) + " inputs");
    }
    const auto imp = empirical_importance(net);
    return spearman(input_fri.values(), imp.avg_abs_weight);
}

}  // namespace iann
