#include "netform/approx/serialization.hpp"

#include <stdexcept>

namespace netform::approx {

nlohmann::json to_json(const Network& net) {
  const auto& spec = net.spec();
  nlohmann::json doc;
  doc["format"] = "netform.network";
  doc["version"] = kNetworkFormatVersion;
  doc["activation"] = "tanh";
  doc["spec"] = {{"input_dim", spec.input_dim},
                 {"hidden_layers", spec.hidden_layers},
                 {"output_dim", spec.output_dim}};
  doc["params"] = std::vector<double>(net.params().begin(), net.params().end());
  return doc;
}

Network network_from_json(const nlohmann::json& doc) {
  if (doc.value("format", "") != "netform.network")
    throw std::runtime_error("not a netform.network document");
  if (doc.value("version", 0) != kNetworkFormatVersion)
    throw std::runtime_error("unsupported network format version");
  if (doc.value("activation", "") != "tanh") throw std::runtime_error("unsupported activation");
  const auto& s = doc.at("spec");
  NetworkSpec spec{s.at("input_dim").get<std::size_t>(),
                   s.at("hidden_layers").get<std::vector<std::size_t>>(),
                   s.at("output_dim").get<std::size_t>()};
  try {
    return Network(spec, doc.at("params").get<std::vector<double>>());
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("bad network document: ") + e.what());
  }
}

}  // namespace netform::approx
