#include "netform/grid/netform_encoding.hpp"

#include <stdexcept>

#include "netform/grid/memory.hpp"
#include "netform/grid/rules.hpp"
#include "netform/grid/scenario.hpp"

namespace netform::grid {

using core::ParentValues;
using core::Value;
using core::VariableSpace;

std::vector<double> encode_state(const GridState& s) {
  return {s.p2, s.q2, s.p3, s.q3, static_cast<double>(s.q3_level), s.V1,
          s.P2, s.Q2, s.P1, s.Q1, s.V2,                            s.V3};
}

GridState decode_state(std::span<const double> raw) {
  if (raw.size() != kStateDim) throw std::invalid_argument("state vector has the wrong length");
  GridState s;
  s.p2 = raw[0];
  s.q2 = raw[1];
  s.p3 = raw[2];
  s.q3 = raw[3];
  s.q3_level = static_cast<std::size_t>(raw[4]);
  s.V1 = raw[5];
  s.P2 = raw[6];
  s.Q2 = raw[7];
  s.P1 = raw[8];
  s.Q1 = raw[9];
  s.V2 = raw[10];
  s.V3 = raw[11];
  return s;
}

namespace {

const std::vector<double>& vec(const Value& v) { return std::get<std::vector<double>>(v); }

std::size_t index(const Value& v) { return static_cast<std::size_t>(std::get<std::int64_t>(v)); }

Value defender_obs_value(ParentValues p, Rng&) {
  const auto o = observe_defender(decode_state(vec(p[0])));
  return std::vector<double>{o.V1, o.V2, o.V3, o.P1, o.Q1};
}

Value attacker_obs_value(ParentValues p, Rng&) {
  const auto o = observe_attacker(decode_state(vec(p[0])));
  return std::vector<double>{o.V2, o.V3, o.p3, o.q3};
}

DefenderObs defender_obs(const Value& v) {
  const auto& o = vec(v);
  return {o[0], o[1], o[2], o[3], o[4]};
}

AttackerObs attacker_obs(const Value& v) {
  const auto& o = vec(v);
  return {o[0], o[1], o[2], o[3]};
}

// Observation and memory nodes shared by the base and the kernel slices.
void add_observers(core::SemiBayesNet& net) {
  net.add_chance("O_D", VariableSpace::real_vector(5), {"S"}, defender_obs_value);
  net.add_chance("O_A", VariableSpace::real_vector(4), {"S"}, attacker_obs_value);
}

void add_decisions(core::SemiBayesNet& net) {
  net.add_decision("D_D", VariableSpace::finite_discrete(kDefenderActionCount), {"M_D"}, kDefenderId);
  net.add_decision("D_A", VariableSpace::finite_discrete(kAttackerLevelCount), {"M_A"}, kAttackerId);
}

}  // namespace

GridNetform as_netform(const GridParams& params) {
  params.validate();
  const auto state_space = VariableSpace::real_vector(kStateDim);
  const auto md_space = VariableSpace::real_vector(defender_memory_dim(params));
  const auto ma_space = VariableSpace::real_vector(attacker_memory_dim(params));

  GridNetform out;

  auto& base = out.base;
  base.add_player(kDefenderId).add_player(kAttackerId);
  base.add_chance("S", state_space, {},
                  [params](ParentValues, Rng& rng) -> Value {
                    return encode_state(initial_state(params, rng));
                  });
  add_observers(base);
  base.add_chance("M_D", md_space, {"O_D"}, [params](ParentValues p, Rng&) -> Value {
    return encode(initial_defender_memory(defender_obs(p[0])), params);
  });
  base.add_chance("M_A", ma_space, {"O_A"}, [params](ParentValues p, Rng&) -> Value {
    return encode(initial_attacker_memory(attacker_obs(p[0])), params);
  });
  add_decisions(base);

  auto& kernel = out.kernel;
  kernel.add_player(kDefenderId).add_player(kAttackerId);
  kernel.add_input("S_in", state_space);
  kernel.add_input("M_D_in", md_space);
  kernel.add_input("M_A_in", ma_space);
  kernel.add_input("D_D_in", VariableSpace::finite_discrete(kDefenderActionCount));
  kernel.add_input("D_A_in", VariableSpace::finite_discrete(kAttackerLevelCount));
  kernel.add_chance("S", state_space, {"S_in", "D_D_in", "D_A_in"},
                    [params](ParentValues p, Rng& rng) -> Value {
                      const auto prev = decode_state(vec(p[0]));
                      const double v1 =
                          apply_defender_action(prev.V1, defender_action_from_index(index(p[1])), params);
                      const double p2 = uniform_real(rng, params.p2_lo, params.p2_hi);
                      return encode_state(make_state(p2, index(p[2]), v1, params));
                    });
  add_observers(kernel);
  kernel.add_chance("M_D", md_space, {"M_D_in", "O_D", "D_D_in"},
                    [params](ParentValues p, Rng&) -> Value {
                      const auto prev = decode_defender_memory(vec(p[0]), params);
                      return encode(advance(prev, defender_obs(p[1]), index(p[2]), params), params);
                    });
  kernel.add_chance("M_A", ma_space, {"M_A_in", "O_A", "D_A_in"},
                    [params](ParentValues p, Rng&) -> Value {
                      const auto prev = decode_attacker_memory(vec(p[0]), params);
                      return encode(advance(prev, attacker_obs(p[1]), index(p[2]), params), params);
                    });
  add_decisions(kernel);

  out.binding.pairs = {{"S", "S_in"}, {"M_D", "M_D_in"}, {"M_A", "M_A_in"},
                       {"D_D", "D_D_in"}, {"D_A", "D_A_in"}};

  out.rewards[kDefenderId] = [params](const core::Instantiation& slice) {
    const auto s = decode_state(vec(slice.at("S")));
    return defender_reward(s.V2, s.V3, params);
  };
  out.rewards[kAttackerId] = [params](const core::Instantiation& slice) {
    return attacker_reward(decode_state(vec(slice.at("S"))).V2, params);
  };
  return out;
}

core::IteratedGame make_iterated_game(const GridParams& params) {
  auto nf = as_netform(params);
  return core::IteratedGame(std::move(nf.base), std::move(nf.kernel), std::move(nf.binding),
                            params.horizon, std::move(nf.rewards));
}

Value MemoryPolicyAdapter::decide(ParentValues parents, Rng& rng) const {
  if (parents.size() != 1) throw std::invalid_argument("policy node expects one memory parent");
  return static_cast<std::int64_t>(policy_->act(vec(parents[0]), rng));
}

core::PolicyMap make_policy_map(levelk::PolicyRef defender, levelk::PolicyRef attacker) {
  return {{kDefenderId, std::make_shared<const MemoryPolicyAdapter>(std::move(defender))},
          {kAttackerId, std::make_shared<const MemoryPolicyAdapter>(std::move(attacker))}};
}

}  // namespace netform::grid
