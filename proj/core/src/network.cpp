#include "iann/network.hpp"

#include <cmath>
#include <string>

namespace iann {

void Topology::validate() const {
    if (n_inputs < 1 || n_hidden < 1 || n_outputs < 1) {
        throw validation_error("topology counts must all be >= 1, got " + std::to_string(n_inputs) + "-" +
                               std::to_string(n_hidden) + "-" + std::to_string(n_outputs));
    }
}

Network Network::zeros(const Topology& t) {
    t.validate();
    Network net;
    net.topology = t;
    net.w_in = Matrix(t.n_hidden, t.n_inputs);
    net.theta_hidden.assign(t.n_hidden, 0.0);
    net.w_out = Matrix(t.n_outputs, t.n_hidden);
    net.theta_out.assign(t.n_outputs, 0.0);
    return net;
}

bool Network::all_finite() const {
    auto ok = [](std::span<const double> v) {
        for (double x : v)
            if (!std::isfinite(x)) return false;
        return true;
    };
    return ok(w_in.flat()) && ok(theta_hidden) && ok(w_out.flat()) && ok(theta_out);
}

double sigmoid(double z) {
    return 1.0 / (1.0 + std::exp(-z));
}

Activations forward(const Network& net, std::span<const double> x) {
    const auto& t = net.topology;
    if (static_cast<int>(x.size()) != t.n_inputs) {
        throw validation_error("forward: input has " + std::to_string(x.size()) + " entries, network expects " +
                               std::to_string(t.n_inputs));
    }
    for (double v : x) {
        if (!std::isfinite(v)) throw validation_error("forward: non-finite input value");
    }

    Activations a;
    a.input.assign(x.begin(), x.end());
    a.hidden_pre.resize(t.n_hidden);
    a.hidden_post.resize(t.n_hidden);
    a.output_pre.resize(t.n_outputs);
    a.output_post.resize(t.n_outputs);

    for (int j = 0; j < t.n_hidden; ++j) {
        const auto w = net.w_in.row(j);
        double acc = net.theta_hidden[j];
        for (int i = 0; i < t.n_inputs; ++i) acc += w[i] * x[i];
        a.hidden_pre[j] = acc;
        a.hidden_post[j] = sigmoid(acc);
    }
    for (int y = 0; y < t.n_outputs; ++y) {
        const auto w = net.w_out.row(y);
        double acc = net.theta_out[y];
        for (int j = 0; j < t.n_hidden; ++j) acc += w[j] * a.hidden_post[j];
        a.output_pre[y] = acc;
        a.output_post[y] = sigmoid(acc);
    }
    return a;
}

int predict_from_outputs(std::span<const double> output_post) {
    if (output_post.empty()) throw validation_error("predict: no outputs");
    if (output_post.size() == 1) return output_post[0] >= 0.5 ? 1 : 0;
    int best = 0;
    for (int y = 1; y < static_cast<int>(output_post.size()); ++y) {
        if (output_post[y] > output_post[best]) best = y;
    }
    return best;
}

int predict(const Network& net, std::span<const double> x) {
    return predict_from_outputs(forward(net, x).output_post);
}

}  // namespace iann
