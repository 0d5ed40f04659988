#pragma once

#include <cstdint>
#include <vector>

#include "netform/levelk/sarsa.hpp"

namespace netform::levelk {

struct EvalReport {
  /// Total reward / (episodes * horizon), per player.
  std::vector<double> mean_reward_per_step;
  /// Standard deviation of the per-episode means, per player.
  std::vector<double> episode_stddev;
  /// per_episode[player][episode] = that episode's mean reward per step.
  std::vector<std::vector<double>> per_episode;
  std::size_t episodes = 0;
  std::size_t horizon = 0;
};

/// Episode e draws from derive_rng(seed, {e}).
Rng episode_rng(std::uint64_t seed, std::size_t episode);

/// Independent rollouts with every player acting on its own policy. Trained
/// policies come out of train_level with their evaluation epsilon (0 by
/// default), so play is greedy.
EvalReport evaluate(const EpisodicGame& game, std::span<const PolicyRef> policies,
                    std::size_t episodes, std::uint64_t seed);

}  // namespace netform::levelk
