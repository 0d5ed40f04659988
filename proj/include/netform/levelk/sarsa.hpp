#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "netform/levelk/game.hpp"
#include "netform/levelk/policy.hpp"

namespace netform::levelk {

struct TrainConfig {
  std::size_t episodes = 20000;
  double gamma = 0.95;
  double learning_rate = 0.1;
  double epsilon_start = 0.5;
  double epsilon_end = 0.01;
  double epsilon_decay = 0.9997;
  /// Overrides the game's per-player optimistic bias when set.
  std::optional<double> optimistic_bias;
  std::vector<std::size_t> hidden_layers{16, 16};
  double init_scale = 0.1;
  /// Exploration rate of the returned policy.
  double eval_epsilon = 0.0;
  std::uint64_t seed = 0;

  /// Throws std::invalid_argument when a field is out of range.
  void validate() const;
};

/// epsilon_end + (epsilon_start - epsilon_end) * decay^episode.
double epsilon_schedule(std::size_t episode, const TrainConfig& config);

struct Transition {
  std::vector<double> s;
  std::size_t a = 0;
  double r = 0.0;
  std::vector<double> s_next;
  std::size_t a_next = 0;
  bool terminal = false;
};

/// One averaged gradient step over an episode's transitions. Every target
/// r + gamma * Q(s_next)[a_next] (r alone when terminal) is computed with the
/// parameters as they were before the step.
void semi_batch_update(approx::Network& network, std::span<const Transition> transitions,
                       double gamma, double learning_rate);

class DivergenceError : public std::runtime_error {
 public:
  DivergenceError(std::size_t episode)
      : std::runtime_error("Q-network diverged in training episode " + std::to_string(episode)),
        episode_(episode) {}
  std::size_t episode() const { return episode_; }

 private:
  std::size_t episode_;
};

using PolicyRef = std::shared_ptr<const Policy>;

/// One-step on-policy SARSA for `trainee` with every other player fixed to
/// `opponents[player]` (the trainee's slot is ignored). Transitions are
/// gathered for a whole episode and applied at its end.
QPolicy train_level(const EpisodicGame& game, std::size_t trainee,
                    std::span<const PolicyRef> opponents, const TrainConfig& config, Rng& rng);

}  // namespace netform::levelk
