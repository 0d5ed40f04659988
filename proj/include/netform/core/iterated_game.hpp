#pragma once

#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "netform/core/semi_bayes_net.hpp"

namespace netform::core {

/// Complete assignment of a net's nodes.
using Instantiation = std::map<NodeId, Value>;

/// Per-player, per-slice reward of a kernel instantiation.
using RewardFunction = std::function<double(const Instantiation&)>;

/// The decision rule a player executes at every slice. Values are actions in
/// the decision node's space; the choice of rule itself is made once, before
/// play, by whoever builds the PolicyMap.
class DecisionPolicy {
 public:
  virtual ~DecisionPolicy() = default;
  virtual Value decide(ParentValues parents, Rng& rng) const = 0;
};

using PolicyMap = std::map<PlayerId, std::shared_ptr<const DecisionPolicy>>;

class GameError : public std::runtime_error {
 public:
  GameError(const std::string& what, std::vector<Violation> violations)
      : std::runtime_error(what), violations_(std::move(violations)) {}
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

/// Base net, kernel net repeated `horizon` times, and per-step rewards.
class IteratedGame {
 public:
  /// Validates both nets and the binding against base->kernel and
  /// kernel->kernel gluing. Throws GameError listing every violation.
  IteratedGame(SemiBayesNet base, SemiBayesNet kernel, GlueBinding binding, std::size_t horizon,
               std::map<PlayerId, RewardFunction> rewards);

  const SemiBayesNet& base() const { return base_; }
  const SemiBayesNet& kernel() const { return kernel_; }
  const GlueBinding& binding() const { return binding_; }
  std::size_t horizon() const { return horizon_; }
  const std::map<PlayerId, RewardFunction>& rewards() const { return rewards_; }

  const std::vector<NodeId>& base_order() const { return base_order_; }
  const std::vector<NodeId>& kernel_order() const { return kernel_order_; }

 private:
  SemiBayesNet base_;
  SemiBayesNet kernel_;
  GlueBinding binding_;
  std::size_t horizon_;
  std::map<PlayerId, RewardFunction> rewards_;
  std::vector<NodeId> base_order_;
  std::vector<NodeId> kernel_order_;
};

struct Trajectory {
  Instantiation base;
  std::vector<Instantiation> slices;
  std::map<PlayerId, std::vector<double>> rewards;
};

class SamplingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Ancestral sampling of one slice. Glued inputs take their values from
/// `boundary`; chance nodes draw from their kernels; decision nodes ask the
/// owner's policy.
Instantiation sample_slice(const SemiBayesNet& net, const Instantiation& boundary,
                           const PolicyMap& policies, Rng& rng);

/// Base slice followed by `horizon` kernel slices, each glued to the one
/// before. The nets are never unrolled.
Trajectory rollout(const IteratedGame& game, const PolicyMap& policies, Rng& rng);

}  // namespace netform::core
