#pragma once

#include <string>
#include <string_view>

#include "iann/network.hpp"

namespace iann {

/// JSON form of a network, schema documented in docs/formats.md. Weight
/// matrices are row-major (one array per receiving unit); doubles use
/// shortest round-trip formatting, so save/load reproduces the exact values.
/// Serialization refuses non-finite weights.
std::string network_to_json(const Network& net);
Network network_from_json(std::string_view json_text);

void save_network(const Network& net, const std::string& path);
Network load_network(const std::string& path);

}  // namespace iann
