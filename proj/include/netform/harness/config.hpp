#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"
#include "netform/grid/params.hpp"
#include "netform/levelk/sarsa.hpp"

namespace netform::harness {

struct Pairing {
  std::size_t defender_level = 0;
  std::size_t attacker_level = 0;
  bool operator==(const Pairing&) const = default;
};

struct ExperimentConfig {
  grid::GridParams scenario;
  levelk::TrainConfig training;
  std::size_t k_max = 2;
  std::vector<double> q3max_sweep{0.2, 0.7, 1.2, 1.6};
  /// Defaults to every pairing through k_max.
  std::vector<Pairing> pairings;
  std::size_t eval_episodes = 50;
  std::vector<std::uint64_t> seeds{0, 1, 2};
  std::string output_dir = "out";

  /// Throws std::invalid_argument on a broken invariant.
  void validate() const;
};

std::vector<Pairing> all_pairings(std::size_t k_max);

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Missing keys keep their defaults; unknown keys raise ConfigError.
ExperimentConfig config_from_json(const nlohmann::json& doc);
ExperimentConfig load_config(const std::filesystem::path& path);

nlohmann::json to_json(const grid::GridParams& params);
nlohmann::json to_json(const ExperimentConfig& config);

}  // namespace netform::harness
