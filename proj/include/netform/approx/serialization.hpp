#pragma once

#include <string>

#include "json.hpp"
#include "netform/approx/network.hpp"

namespace netform::approx {

inline constexpr int kNetworkFormatVersion = 1;

/// {"format": "netform.network", "version": 1, "activation": "tanh",
///  "spec": {...}, "params": [...]}; doubles keep round-trip precision.
nlohmann::json to_json(const Network& net);
/// Throws std::runtime_error on a wrong format tag, version or shape.
Network network_from_json(const nlohmann::json& doc);

}  // namespace netform::approx
