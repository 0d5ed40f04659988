#pragma once

#include <map>
#include <span>
#include <vector>

#include "netform/core/iterated_game.hpp"
#include "netform/grid/params.hpp"
#include "netform/grid/physics.hpp"
#include "netform/levelk/sarsa.hpp"

namespace netform::grid {

inline const core::PlayerId kDefenderId = "defender";
inline const core::PlayerId kAttackerId = "attacker";

/// Flat state layout used by the S nodes:
///   p2 q2 p3 q3 q3_level V1 P2 Q2 P1 Q1 V2 V3
inline constexpr std::size_t kStateDim = 12;
std::vector<double> encode_state(const GridState& s);
GridState decode_state(std::span<const double> raw);

/// The scenario as generic nets. Each slice holds the state S, the
/// observations O_D and O_A, the memories M_D and M_A and the decision
/// nodes D_D and D_A. The kernel gets S, M_D, M_A, D_D and D_A of the
/// previous slice as glued inputs (suffix "_in").
struct GridNetform {
  core::SemiBayesNet base;
  core::SemiBayesNet kernel;
  core::GlueBinding binding;
  std::map<core::PlayerId, core::RewardFunction> rewards;
};

GridNetform as_netform(const GridParams& params);
core::IteratedGame make_iterated_game(const GridParams& params);

/// Exposes a level-K policy as the decision rule of a memory-fed decision
/// node.
class MemoryPolicyAdapter final : public core::DecisionPolicy {
 public:
  explicit MemoryPolicyAdapter(levelk::PolicyRef policy) : policy_(std::move(policy)) {}
  core::Value decide(core::ParentValues parents, Rng& rng) const override;

 private:
  levelk::PolicyRef policy_;
};

core::PolicyMap make_policy_map(levelk::PolicyRef defender, levelk::PolicyRef attacker);

}  // namespace netform::grid
