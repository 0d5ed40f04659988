#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "netform/approx/network.hpp"
#include "netform/core/random.hpp"

namespace netform::levelk {

/// A player's decision rule: raw memory in, action index out. The same
/// object is consulted at every step of an episode.
class Policy {
 public:
  virtual ~Policy() = default;
  virtual std::size_t act(std::span<const double> memory, Rng& rng) const = 0;
  virtual std::string describe() const = 0;
};

/// Raw memory -> network input features.
using FeatureEncoder = std::function<std::vector<double>(std::span<const double> memory)>;

/// Epsilon-greedy policy over a Q-network with one output per action.
class QPolicy final : public Policy {
 public:
  QPolicy(approx::Network network, double epsilon, FeatureEncoder encoder);

  std::size_t act(std::span<const double> memory, Rng& rng) const override;
  std::string describe() const override;

  std::vector<double> q_values(std::span<const double> features) const;

  const approx::Network& network() const { return network_; }
  approx::Network& network() { return network_; }
  std::size_t action_count() const { return network_.spec().output_dim; }
  double epsilon() const { return epsilon_; }
  void set_epsilon(double epsilon);
  const FeatureEncoder& encoder() const { return encoder_; }

 private:
  approx::Network network_;
  double epsilon_;
  FeatureEncoder encoder_;
};

/// Lowest index among the maximal entries.
std::size_t argmax(std::span<const double> values);

/// With probability 1 - epsilon the greedy action, otherwise uniform over all
/// actions. Draws nothing from `rng` when epsilon is 0.
std::size_t select_action(const QPolicy& policy, std::span<const double> features, Rng& rng);

}  // namespace netform::levelk
