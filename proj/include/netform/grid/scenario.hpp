#pragma once

#include <memory>
#include <vector>

#include "netform/grid/memory.hpp"
#include "netform/grid/physics.hpp"
#include "netform/grid/rules.hpp"
#include "netform/levelk/game.hpp"
#include "netform/levelk/sarsa.hpp"

namespace netform::grid {

enum Player : std::size_t { kDefender = 0, kAttacker = 1 };

struct Memories {
  DefenderMemory defender;
  AttackerMemory attacker;
};

struct Rewards {
  double defender = 0.0;
  double attacker = 0.0;
};

struct StepOutcome {
  GridState state;
  Memories memories;
  Rewards rewards;
};

/// Slice 0: V1 at its initial setting, q3 at the middle level, p2 drawn.
GridState initial_state(const GridParams& params, Rng& rng);
Memories initial_memories(const GridState& s);

/// One step of the cyber battle: apply the tap move and the q3 level, draw a
/// fresh load, solve the feeder, update both memories and score the new
/// state.
StepOutcome transition(const GridState& state, const Memories& memories,
                       DefenderAction defender_action, std::size_t attacker_level, Rng& rng,
                       const GridParams& params);

class GridEpisode final : public levelk::Episode {
 public:
  GridEpisode(const GridParams& params, Rng& rng);

  std::span<const double> memory(std::size_t player) const override;
  std::vector<double> step(std::span<const std::size_t> actions, Rng& rng) override;

  const GridState& state() const { return state_; }
  const Memories& memories() const { return memories_; }
  std::size_t steps_taken() const { return t_; }

 private:
  void refresh_raw();

  GridParams params_;
  GridState state_;
  Memories memories_;
  std::vector<double> raw_defender_;
  std::vector<double> raw_attacker_;
  std::size_t t_ = 0;
};

/// The scenario as a two-player episodic game: player 0 defends, player 1
/// attacks.
class GridGame final : public levelk::EpisodicGame {
 public:
  explicit GridGame(GridParams params);

  const GridParams& params() const { return params_; }

  std::size_t player_count() const override { return 2; }
  std::size_t action_count(std::size_t player) const override;
  std::size_t feature_dim(std::size_t player) const override;
  std::vector<double> features(std::size_t player, std::span<const double> memory) const override;
  levelk::FeatureEncoder encoder(std::size_t player) const override;
  std::size_t horizon() const override { return params_.horizon; }
  /// The best one-step reward: 0 for the defender, 1 for the attacker (the
  /// two band violations exclude each other). A discounted-sum bound such
  /// as 1 / (1 - gamma) starts the tanh layers so far from the true values
  /// that they saturate on the way down.
  double optimistic_bias(std::size_t player, double gamma) const override;

  std::unique_ptr<levelk::Episode> start(Rng& rng) const override;
  std::unique_ptr<GridEpisode> start_grid(Rng& rng) const;

  std::vector<levelk::PolicyRef> level0_policies() const;

 private:
  GridParams params_;
};

}  // namespace netform::grid
