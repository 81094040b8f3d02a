#include "iann/train.hpp"

#include <cmath>
#include <numeric>

#include "iann/rng.hpp"
#include "text_util.hpp"

namespace iann {

void TrainConfig::validate() const {
    if (!(learning_rate > 0.0) || !std::isfinite(learning_rate)) {
        throw validation_error("learning_rate must be positive and finite");
    }
    if (epochs < 1) throw validation_error("epochs must be >= 1");
}

Deltas backprop_deltas(const Network& net, const Activations& activations, std::span<const double> target) {
    const auto& t = net.topology;
    if (static_cast<int>(target.size()) != t.n_outputs) {
        throw validation_error("backprop: target has " + std::to_string(target.size()) + " entries, network has " +
                               std::to_string(t.n_outputs) + " outputs");
    }
    if (static_cast<int>(activations.hidden_post.size()) != t.n_hidden ||
        static_cast<int>(activations.output_post.size()) != t.n_outputs) {
        throw validation_error("backprop: activations do not match network topology");
    }

    Deltas d;
    d.output.resize(static_cast<std::size_t>(t.n_outputs));
    d.hidden.resize(static_cast<std::size_t>(t.n_hidden));

    for (int y = 0; y < t.n_outputs; ++y) {
        const double o = activations.output_post[static_cast<std::size_t>(y)];
        d.output[static_cast<std::size_t>(y)] = sigmoid_deriv_from_post(o) * (target[static_cast<std::size_t>(y)] - o);
    }
    for (int j = 0; j < t.n_hidden; ++j) {
        double downstream = 0.0;
        for (int y = 0; y < t.n_outputs; ++y) {
            downstream += net.w_out(y, j) * d.output[static_cast<std::size_t>(y)];
        }
        const double h = activations.hidden_post[static_cast<std::size_t>(j)];
        d.hidden[static_cast<std::size_t>(j)] = sigmoid_deriv_from_post(h) * downstream;
    }
    return d;
}

void apply_iann_update(Network& net, const Deltas& deltas, const Activations& activations, double learning_rate,
                       const FriVector& input_fri) {
    const auto& t = net.topology;
    if (input_fri.size() != t.n_inputs) {
        throw validation_error("update: FRI has " + std::to_string(input_fri.size()) + " entries, network has " +
                               std::to_string(t.n_inputs) + " inputs");
    }
    if (static_cast<int>(deltas.hidden.size()) != t.n_hidden ||
        static_cast<int>(deltas.output.size()) != t.n_outputs) {
        throw validation_error("update: deltas do not match network topology");
    }

    const auto& fri = input_fri.values();
    for (int j = 0; j < t.n_hidden; ++j) {
        const double step = learning_rate * deltas.hidden[static_cast<std::size_t>(j)];
        auto row = net.w_in.row(j);
        for (int i = 0; i < t.n_inputs; ++i) {
            // Importance multiplies last, so the fri==1 path produces the
            // identical bits of the plain rule.
            row[i] += (step * activations.input[static_cast<std::size_t>(i)]) * fri[static_cast<std::size_t>(i)];
        }
        net.theta_hidden[static_cast<std::size_t>(j)] += step;
    }
    for (int y = 0; y < t.n_outputs; ++y) {
        const double step = learning_rate * deltas.output[static_cast<std::size_t>(y)];
        auto row = net.w_out.row(y);
        for (int j = 0; j < t.n_hidden; ++j) {
            row[j] += step * activations.hidden_post[static_cast<std::size_t>(j)];
        }
        net.theta_out[static_cast<std::size_t>(y)] += step;
    }
}

TrainTrace train(Network net, const Dataset& dataset, const TrainConfig& config, const FriVector& input_fri) {
    config.validate();
    dataset.validate();
    const auto& t = net.topology;
    if (dataset.n_inputs() != t.n_inputs) {
        throw validation_error("train: dataset encodes " + std::to_string(dataset.n_inputs()) +
                               " inputs, network has " + std::to_string(t.n_inputs));
    }
    if (dataset.n_outputs() != t.n_outputs) {
        throw validation_error("train: dataset needs " + std::to_string(dataset.n_outputs()) +
                               " outputs, network has " + std::to_string(t.n_outputs));
    }

    // Targets are fixed per instance; build them once.
    std::vector<std::vector<double>> targets;
    targets.reserve(dataset.instances.size());
    for (const auto& inst : dataset.instances) targets.push_back(target_vector(inst.label, t.n_outputs));

    Rng shuffle_rng(config.seed);
    std::vector<int> order(dataset.instances.size());
    std::iota(order.begin(), order.end(), 0);
    if (!config.shuffle_each_epoch) shuffle_rng.shuffle(order);

    TrainTrace trace;
    trace.epoch_mse.reserve(static_cast<std::size_t>(config.epochs));

    for (int epoch = 0; epoch < config.epochs; ++epoch) {
        if (config.shuffle_each_epoch) shuffle_rng.shuffle(order);
        double sum_sq = 0.0;
        for (int idx : order) {
            const auto& inst = dataset.instances[static_cast<std::size_t>(idx)];
            const auto acts = forward(net, inst.x);
            const auto& target = targets[static_cast<std::size_t>(idx)];
            double example_sq = 0.0;
            for (int y = 0; y < t.n_outputs; ++y) {
                const double e = target[static_cast<std::size_t>(y)] - acts.output_post[static_cast<std::size_t>(y)];
                example_sq += e * e;
            }
            if (!std::isfinite(example_sq)) {
                throw numeric_error("training diverged: non-finite error at epoch " + std::to_string(epoch) +
                                    ", example " + std::to_string(idx));
            }
            sum_sq += example_sq;
            const auto deltas = backprop_deltas(net, acts, target);
            apply_iann_update(net, deltas, acts, config.learning_rate, input_fri);
        }
        trace.epoch_mse.push_back(sum_sq / static_cast<double>(dataset.instances.size()));
        if (!net.all_finite()) {
            throw numeric_error("training diverged: non-finite weight after epoch " + std::to_string(epoch));
        }
    }

    trace.final_net = std::move(net);
    return trace;
}

std::string trace_to_csv(const TrainTrace& trace) {
    std::string out = "epoch,mse\n";
    for (std::size_t e = 0; e < trace.epoch_mse.size(); ++e) {
        out += std::to_string(e);
        out += ',';
        out += detail::format_double(trace.epoch_mse[e]);
        out += '\n';
    }
    return out;
}

}  // namespace iann
