#pragma once

#include <functional>
#include <vector>

#include "netform/levelk/sarsa.hpp"

namespace netform::levelk {

/// policies[player][level]; level 0 holds the supplied priors.
struct LevelKHierarchy {
  std::vector<std::vector<PolicyRef>> policies;

  const PolicyRef& at(std::size_t player, std::size_t level) const {
    return policies.at(player).at(level);
  }
  std::size_t max_level() const { return policies.empty() ? 0 : policies.front().size() - 1; }
};

struct TrainingRun {
  std::size_t player;
  std::size_t level;
  /// Level of every opponent this run trained against.
  std::size_t opponent_level;
};

/// Called before each training run starts, with every policy stored so far.
using TrainingObserver = std::function<void(const TrainingRun&, const LevelKHierarchy&)>;

/// Stream used for the (player, level) training run.
Rng training_rng(std::uint64_t seed, std::size_t player, std::size_t level);

/// For k = 1..max_level and each player in index order, trains the level-k
/// policy against every opponent's stored level-(k-1) policy. Each run draws
/// from training_rng(config.seed, player, k).
LevelKHierarchy build_hierarchy(const EpisodicGame& game, std::vector<PolicyRef> level0s,
                                std::size_t max_level, const TrainConfig& config,
                                const TrainingObserver& observer = {});

}  // namespace netform::levelk
