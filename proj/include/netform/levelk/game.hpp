#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "netform/core/random.hpp"
#include "netform/levelk/policy.hpp"

namespace netform::levelk {

/// One running play of an EpisodicGame.
class Episode {
 public:
  virtual ~Episode() = default;
  /// The player's current memory, the input of its policy.
  virtual std::span<const double> memory(std::size_t player) const = 0;
  /// Applies one joint action and returns each player's reward for the new
  /// step.
  virtual std::vector<double> step(std::span<const std::size_t> actions, Rng& rng) = 0;
};

/// A repeated game with a fixed horizon, seen from the level-K trainer. Each
/// player picks actions from a finite set given its memory.
class EpisodicGame {
 public:
  virtual ~EpisodicGame() = default;

  virtual std::size_t player_count() const = 0;
  virtual std::size_t action_count(std::size_t player) const = 0;
  virtual std::size_t feature_dim(std::size_t player) const = 0;
  virtual std::vector<double> features(std::size_t player, std::span<const double> memory) const = 0;
  /// Encoder handed to the player's QPolicy. The default forwards to
  /// features() and so borrows the game; overrides may return a
  /// self-contained function.
  virtual FeatureEncoder encoder(std::size_t player) const {
    return [this, player](std::span<const double> m) { return features(player, m); };
  }
  virtual std::size_t horizon() const = 0;
  /// Initial Q-value for an untrained policy, high relative to the player's
  /// reward range.
  virtual double optimistic_bias(std::size_t player, double gamma) const = 0;

  virtual std::unique_ptr<Episode> start(Rng& rng) const = 0;
};

}  // namespace netform::levelk
