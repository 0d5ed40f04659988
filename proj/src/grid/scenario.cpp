#include "netform/grid/scenario.hpp"

#include <stdexcept>

#include "netform/grid/features.hpp"
#include "netform/grid/level0.hpp"

namespace netform::grid {

GridState initial_state(const GridParams& params, Rng& rng) {
  const double p2 = uniform_real(rng, params.p2_lo, params.p2_hi);
  return make_state(p2, kAttackerMidLevel, params.v1_initial, params);
}

Memories initial_memories(const GridState& s) {
  return {initial_defender_memory(observe_defender(s)), initial_attacker_memory(observe_attacker(s))};
}

StepOutcome transition(const GridState& state, const Memories& memories,
                       DefenderAction defender_action, std::size_t attacker_level, Rng& rng,
                       const GridParams& params) {
  if (attacker_level >= kAttackerLevelCount) throw std::out_of_range("attacker level");
  const double v1 = apply_defender_action(state.V1, defender_action, params);
  const double p2 = uniform_real(rng, params.p2_lo, params.p2_hi);
  StepOutcome out;
  out.state = make_state(p2, attacker_level, v1, params);
  out.memories.defender = advance(memories.defender, observe_defender(out.state),
                                  static_cast<std::size_t>(defender_action), params);
  out.memories.attacker = advance(memories.attacker, observe_attacker(out.state), attacker_level, params);
  out.rewards = {defender_reward(out.state.V2, out.state.V3, params),
                 attacker_reward(out.state.V2, params)};
  return out;
}

GridEpisode::GridEpisode(const GridParams& params, Rng& rng)
    : params_(params), state_(initial_state(params, rng)), memories_(initial_memories(state_)) {
  refresh_raw();
}

void GridEpisode::refresh_raw() {
  raw_defender_ = encode(memories_.defender, params_);
  raw_attacker_ = encode(memories_.attacker, params_);
}

std::span<const double> GridEpisode::memory(std::size_t player) const {
  switch (player) {
    case kDefender: return raw_defender_;
    case kAttacker: return raw_attacker_;
  }
  throw std::out_of_range("grid player index");
}

std::vector<double> GridEpisode::step(std::span<const std::size_t> actions, Rng& rng) {
  if (actions.size() != 2) throw std::invalid_argument("grid step needs two actions");
  auto next = transition(state_, memories_, defender_action_from_index(actions[kDefender]),
                         actions[kAttacker], rng, params_);
  state_ = next.state;
  memories_ = std::move(next.memories);
  refresh_raw();
  ++t_;
  return {next.rewards.defender, next.rewards.attacker};
}

GridGame::GridGame(GridParams params) : params_(params) { params_.validate(); }

std::size_t GridGame::action_count(std::size_t player) const {
  switch (player) {
    case kDefender: return kDefenderActionCount;
    case kAttacker: return kAttackerLevelCount;
  }
  throw std::out_of_range("grid player index");
}

std::size_t GridGame::feature_dim(std::size_t player) const {
  switch (player) {
    case kDefender: return kDefenderFeatureDim;
    case kAttacker: return kAttackerFeatureDim;
  }
  throw std::out_of_range("grid player index");
}

std::vector<double> GridGame::features(std::size_t player, std::span<const double> memory) const {
  switch (player) {
    case kDefender: return encode_defender_features(memory, params_);
    case kAttacker: return encode_attacker_features(memory, params_);
  }
  throw std::out_of_range("grid player index");
}

levelk::FeatureEncoder GridGame::encoder(std::size_t player) const {
  const auto params = params_;
  switch (player) {
    case kDefender:
      return [params](std::span<const double> m) { return encode_defender_features(m, params); };
    case kAttacker:
      return [params](std::span<const double> m) { return encode_attacker_features(m, params); };
  }
  throw std::out_of_range("grid player index");
}

double GridGame::optimistic_bias(std::size_t player, double) const {
  switch (player) {
    case kDefender: return 0.0;
    case kAttacker: return 1.0;
  }
  throw std::out_of_range("grid player index");
}

std::unique_ptr<levelk::Episode> GridGame::start(Rng& rng) const { return start_grid(rng); }

std::unique_ptr<GridEpisode> GridGame::start_grid(Rng& rng) const {
  return std::make_unique<GridEpisode>(params_, rng);
}

std::vector<levelk::PolicyRef> GridGame::level0_policies() const {
  return {std::make_shared<const Level0Defender>(params_),
          std::make_shared<const Level0Attacker>(params_)};
}

}  // namespace netform::grid
