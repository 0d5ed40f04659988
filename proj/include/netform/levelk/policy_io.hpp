#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"
#include "netform/levelk/game.hpp"
#include "netform/levelk/sarsa.hpp"

namespace netform::levelk {

inline constexpr int kPolicyFormatVersion = 1;

struct PolicyMetadata {
  std::string player;
  std::size_t level = 0;
  std::uint64_t seed = 0;
  /// Free-form context recorded alongside, e.g. the scenario parameters.
  nlohmann::json context = nlohmann::json::object();
};

nlohmann::json to_json(const TrainConfig& config);
TrainConfig train_config_from_json(const nlohmann::json& doc);

nlohmann::json policy_to_json(const QPolicy& policy, const PolicyMetadata& meta,
                              const TrainConfig& config);

/// Writes through a temporary file and a rename.
void save_policy(const std::filesystem::path& path, const QPolicy& policy,
                 const PolicyMetadata& meta, const TrainConfig& config);

/// Rebuilds the policy with the game's feature encoder for `player_index`.
/// Throws std::runtime_error on unreadable or mismatched files.
QPolicy load_policy(const std::filesystem::path& path, const EpisodicGame& game,
                    std::size_t player_index, PolicyMetadata* meta = nullptr);

}  // namespace netform::levelk
