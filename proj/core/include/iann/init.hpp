#pragma once

#include <cstdint>

#include "iann/fri.hpp"
#include "iann/network.hpp"

namespace iann {

/// Ranges for the importance-based first-layer initialization.
///
/// A feature selected into a hidden unit's importance subset gets the weight
/// I_k * sign * selected_halfwidth; the default 1.0 places those weights in
/// [-1,1] at exactly the importance magnitude. Unselected features draw
/// uniformly from half that range, [-0.5,0.5] by default, which is also the
/// range used for every bias and for the whole output layer.
struct InitConfig {
    double selected_halfwidth = 1.0;
    double unselected_halfwidth = 0.5;
    std::uint64_t seed = 0;

    /// unselected_halfwidth must equal selected_halfwidth / 2.
    void validate() const;
};

/// Plain uniform initialization: every weight and bias drawn independently
/// from [-0.5, 0.5]. Deterministic per seed.
///
/// Draw order (one stream): w_in rows in hidden-unit order, each row in input
/// order; theta_hidden; w_out rows in output-unit order; theta_out.
Network init_standard(const Topology& topology, std::uint64_t seed);

/// Importance-based initialization of the first layer; everything else is
/// initialized like init_standard.
///
/// Per hidden unit j, independently:
///   1. draw c uniformly from the integers {0, ..., n_inputs};
///   2. choose a uniformly random c-subset F_s of the input features;
///   3. features k in F_s get w(j,k) = I_k * sign, sign being +-1 with equal
///      probability (times selected_halfwidth);
///   4. the remaining features draw uniformly from
///      [-unselected_halfwidth, unselected_halfwidth].
///
/// Only a random subset of features per unit carries its importance value, so
/// the expected absolute first-layer weight grows with I_k while the
/// unit-to-unit variation of a plain random start is preserved. (Setting
/// every first-layer weight to its FRI value plus noise removes that
/// variation and was found to hurt performance; it is intentionally not
/// offered.)
///
/// Draw order (one stream): per hidden unit j: c, then the subset shuffle
/// draws, then one draw per feature in index order (sign if selected, uniform
/// otherwise); afterwards theta_hidden, w_out rows, theta_out as in
/// init_standard.
Network init_iann(const Topology& topology, const FriVector& input_fri, const InitConfig& config);
Network init_iann(const Topology& topology, const FriVector& input_fri, std::uint64_t seed);

}  // namespace iann
