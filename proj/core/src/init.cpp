#include "iann/init.hpp"

#include <cmath>
#include <numeric>
#include <vector>

#include "iann/rng.hpp"

namespace iann {

void InitConfig::validate() const {
    if (!(selected_halfwidth > 0.0) || !std::isfinite(selected_halfwidth)) {
        throw validation_error("selected_halfwidth must be positive and finite");
    }
    if (unselected_halfwidth != selected_halfwidth / 2.0) {
        throw validation_error("unselected_halfwidth must be exactly half of selected_halfwidth");
    }
}

namespace {

void fill_biases_and_output_layer(Network& net, Rng& rng, double halfwidth) {
    for (double& b : net.theta_hidden) b = rng.uniform(-halfwidth, halfwidth);
    for (double& w : net.w_out.flat()) w = rng.uniform(-halfwidth, halfwidth);
    for (double& b : net.theta_out) b = rng.uniform(-halfwidth, halfwidth);
}

}  // namespace

Network init_standard(const Topology& topology, std::uint64_t seed) {
    Network net = Network::zeros(topology);
    Rng rng(seed);
    for (double& w : net.w_in.flat()) w = rng.uniform(-0.5, 0.5);
    fill_biases_and_output_layer(net, rng, 0.5);
    return net;
}

Network init_iann(const Topology& topology, const FriVector& input_fri, const InitConfig& config) {
    config.validate();
    if (input_fri.size() != topology.n_inputs) {
        throw validation_error("init_iann: FRI has " + std::to_string(input_fri.size()) + " entries, topology has " +
                               std::to_string(topology.n_inputs) + " inputs");
    }

    Network net = Network::zeros(topology);
    Rng rng(config.seed);
    const int n = topology.n_inputs;

    std::vector<int> indices(static_cast<std::size_t>(n));
    std::vector<char> selected(static_cast<std::size_t>(n));

    for (int j = 0; j < topology.n_hidden; ++j) {
        const int c = static_cast<int>(rng.uniform_int(0, static_cast<std::uint64_t>(n)));

        // Uniform c-subset via a partial Fisher-Yates pass: after t swaps the
        // first t entries are a uniform t-subset in uniform order.
        std::iota(indices.begin(), indices.end(), 0);
        for (int t = 0; t < c; ++t) {
            const auto pick = static_cast<std::size_t>(rng.uniform_int(t, static_cast<std::uint64_t>(n) - 1));
            std::swap(indices[static_cast<std::size_t>(t)], indices[pick]);
        }
        std::fill(selected.begin(), selected.end(), 0);
        for (int t = 0; t < c; ++t) selected[static_cast<std::size_t>(indices[static_cast<std::size_t>(t)])] = 1;

        auto row = net.w_in.row(j);
        for (int k = 0; k < n; ++k) {
            // The trailing + 0.0 folds the -0.0 a zero-importance pick can
            // produce into +0.0, so frozen weights stay bit-stable under the
            // += updates of training.
            row[k] = selected[static_cast<std::size_t>(k)]
                         ? input_fri[k] * rng.sign() * config.selected_halfwidth + 0.0
                         : rng.uniform(-config.unselected_halfwidth, config.unselected_halfwidth);
        }
    }

    fill_biases_and_output_layer(net, rng, config.unselected_halfwidth);
    return net;
}

Network init_iann(const Topology& topology, const FriVector& input_fri, std::uint64_t seed) {
    InitConfig config;
    config.seed = seed;
    return init_iann(topology, input_fri, config);
}

}  // namespace iann
