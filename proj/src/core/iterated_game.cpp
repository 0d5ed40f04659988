#include "netform/core/iterated_game.hpp"

#include <algorithm>
#include <sstream>

namespace netform::core {

namespace {

std::string join(const std::vector<Violation>& violations) {
  std::ostringstream out;
  for (const auto& v : violations) out << "\n  [" << to_string(v.kind) << "] " << v.message;
  return out.str();
}

Instantiation sample_ordered(const SemiBayesNet& net, const std::vector<NodeId>& order,
                             const Instantiation& boundary, const PolicyMap& policies, Rng& rng) {
  for (const auto& [id, value] : boundary) {
    const auto* node = net.find(id);
    if (node == nullptr || !node->is_input())
      throw SamplingError("boundary value for '" + id + "', which is not a glued input");
  }

  Instantiation out;
  std::vector<Value> parent_values;
  for (const auto& id : order) {
    const auto& node = *net.find(id);
    parent_values.clear();
    for (const auto& p : node.parents) {
      auto it = out.find(p);
      if (it == out.end())
        throw std::logic_error("node '" + id + "' sampled before its parent '" + p + "'");
      parent_values.push_back(it->second);
    }

    Value value;
    if (const auto* chance = std::get_if<ChanceNode>(&node.kind)) {
      if (!chance->kernel) {
        auto b = boundary.find(id);
        if (b == boundary.end()) throw SamplingError("missing boundary value for '" + id + "'");
        value = b->second;
      } else {
        value = chance->kernel(parent_values, rng);
      }
    } else {
      const auto& owner = std::get<DecisionNode>(node.kind).owner;
      auto p = policies.find(owner);
      if (p == policies.end() || !p->second)
        throw SamplingError("no policy for player '" + owner + "'");
      value = p->second->decide(parent_values, rng);
    }
    if (!node.space.contains(value))
      throw SamplingError("node '" + id + "' produced " + describe(value) + " outside " +
                          node.space.describe());
    out.emplace(id, std::move(value));
  }
  return out;
}

Instantiation glue(const GlueBinding& binding, const Instantiation& prev) {
  Instantiation boundary;
  for (const auto& [src, dst] : binding.pairs) boundary.emplace(dst, prev.at(src));
  return boundary;
}

}  // namespace

IteratedGame::IteratedGame(SemiBayesNet base, SemiBayesNet kernel, GlueBinding binding,
                           std::size_t horizon, std::map<PlayerId, RewardFunction> rewards)
    : base_(std::move(base)),
      kernel_(std::move(kernel)),
      binding_(std::move(binding)),
      horizon_(horizon),
      rewards_(std::move(rewards)) {
  if (horizon_ < 1) throw GameError("horizon must be >= 1", {});
  auto check = [](const char* what, std::vector<Violation> v) {
    if (!v.empty()) throw GameError(std::string(what) + join(v), std::move(v));
  };
  check("invalid base net:", validate(base_));
  check("invalid kernel net:", validate(kernel_));
  check("invalid base->kernel binding:", validate_glue(base_, kernel_, binding_));
  check("invalid kernel->kernel binding:", validate_glue(kernel_, kernel_, binding_));
  for (const auto& n : kernel_.nodes())
    if (n.is_input() && std::none_of(binding_.pairs.begin(), binding_.pairs.end(),
                                     [&](const auto& kv) { return kv.second == n.id; }))
      throw GameError("kernel input '" + n.id + "' is not bound", {});
  for (const auto& n : base_.nodes())
    if (n.is_input()) throw GameError("base net has unbound input '" + n.id + "'", {});
  base_order_ = topological_order(base_);
  kernel_order_ = topological_order(kernel_);
}

Instantiation sample_slice(const SemiBayesNet& net, const Instantiation& boundary,
                           const PolicyMap& policies, Rng& rng) {
  return sample_ordered(net, topological_order(net), boundary, policies, rng);
}

Trajectory rollout(const IteratedGame& game, const PolicyMap& policies, Rng& rng) {
  for (const auto& player : game.kernel().players())
    if (!policies.contains(player)) throw SamplingError("no policy for player '" + player + "'");

  Trajectory traj;
  traj.base = sample_ordered(game.base(), game.base_order(), {}, policies, rng);
  traj.slices.reserve(game.horizon());
  for (const auto& [player, fn] : game.rewards()) traj.rewards[player].reserve(game.horizon());

  const Instantiation* prev = &traj.base;
  for (std::size_t t = 0; t < game.horizon(); ++t) {
    traj.slices.push_back(
        sample_ordered(game.kernel(), game.kernel_order(), glue(game.binding(), *prev), policies, rng));
    prev = &traj.slices.back();
    for (const auto& [player, fn] : game.rewards()) traj.rewards[player].push_back(fn(*prev));
  }
  return traj;
}

}  // namespace netform::core
