#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "iann/dataset.hpp"
#include "iann/fri.hpp"
#include "iann/network.hpp"

namespace iann {

/// Hyperparameters for stochastic per-example training.
struct TrainConfig {
    double learning_rate = 0.1;
    int epochs = 100;
    std::uint64_t seed = 0;  // drives example shuffling only
    bool shuffle_each_epoch = true;

    void validate() const;
};

/// Backpropagated error terms for one example.
struct Deltas {
    std::vector<double> hidden;  // delta_j per hidden unit
    std::vector<double> output;  // delta_y per output unit
};

/// Per-epoch mean squared training error plus the trained network.
struct TrainTrace {
    std::vector<double> epoch_mse;  // mean over examples of the summed squared output error
    Network final_net;
};

/// Sigmoid backprop error terms for squared-error loss:
///   output delta_y = o_y (1 - o_y) (t_y - o_y)
///   hidden delta_j = h_j (1 - h_j) sum_y w_out(y,j) delta_y
/// activations must come from forward() on this network.
Deltas backprop_deltas(const Network& net, const Activations& activations, std::span<const double> target);

/// One importance-scaled weight update, in place:
///   first layer:   w_in(j,i) += (alpha * delta_j * x_i) * I_i
///   hidden bias:   theta_hidden[j] += alpha * delta_j
///   output layer:  w_out(y,j) += alpha * delta_y * h_j
///   output bias:   theta_out[y]    += alpha * delta_y
/// Biases and the output layer act as importance-1 connections, so an
/// all-ones FRI makes this exactly the plain backpropagation step; the first
/// layer keeps the trailing multiplication by I_i so that the importance
/// factor scales an otherwise identical product.
void apply_iann_update(Network& net, const Deltas& deltas, const Activations& activations, double learning_rate,
                       const FriVector& input_fri);

/// Stochastic per-example training for config.epochs passes; examples are
/// visited in seeded shuffled order each epoch (a fresh shuffle per epoch
/// when shuffle_each_epoch, one fixed shuffle otherwise). No early stopping
/// or validation split. Throws numeric_error naming epoch and example if a
/// non-finite value shows up.
TrainTrace train(Network net, const Dataset& dataset, const TrainConfig& config, const FriVector& input_fri);

/// TrainTrace as "epoch,mse" CSV.
std::string trace_to_csv(const TrainTrace& trace);

}  // namespace iann
