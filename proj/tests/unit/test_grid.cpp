#include <gtest/gtest.h>

#include <cmath>

#include "grid_cross.hpp"
#include "netform/grid/features.hpp"
#include "netform/grid/level0.hpp"
#include "netform/grid/memory.hpp"
#include "netform/grid/netform_encoding.hpp"
#include "netform/grid/physics.hpp"
#include "netform/grid/rules.hpp"
#include "netform/grid/scenario.hpp"
#include "oracles.hpp"

using namespace netform;
using namespace netform::grid;

namespace {

GridParams with_q3max(double q) {
  GridParams p;
  p.q3_max = q;
  return p;
}

void expect_flows(const Flows& f, double P2, double Q2, double P1, double Q1, double V2, double V3) {
  EXPECT_NEAR(f.P2, P2, 1e-12);
  EXPECT_NEAR(f.Q2, Q2, 1e-12);
  EXPECT_NEAR(f.P1, P1, 1e-12);
  EXPECT_NEAR(f.Q1, Q1, 1e-12);
  EXPECT_NEAR(f.V2, V2, 1e-12);
  EXPECT_NEAR(f.V3, V3, 1e-12);
}

// Memory metrics straight from their definitions over the whole history;
// step n = t-m..t, skipping steps before the first sample.
double defender_metric_oracle(const std::vector<SamplePair>& all, std::size_t t, std::size_t m) {
  double sum = 0.0;
  for (std::size_t n = t >= m ? t - m : 0; n <= t; ++n) {
    if (n == 0) continue;
    sum += sign(all[n][0] - all[n - 1][0]) * sign(all[n][1] - all[n - 1][1]);
  }
  return sum / static_cast<double>(m + 1);
}

double attacker_metric_oracle(const std::vector<SamplePair>& all, std::size_t t, const GridParams& p) {
  double sum = 0.0;
  const auto m = p.memory_window;
  for (std::size_t n = t >= m ? t - m : 0; n <= t; ++n) {
    if (n == 0) continue;
    const double resid = (all[n][0] - all[n - 1][0]) - (all[n][1] - all[n - 1][1]) * p.x2 / p.v0;
    sum += sign(std::floor(resid / p.delta_v));
  }
  return sum;
}

}  // namespace

TEST(GridParams, DefaultsAndValidation) {
  const GridParams p;
  EXPECT_EQ(p.r1, 0.03);
  EXPECT_EQ(p.x2, 0.03);
  EXPECT_EQ(p.delta_v, 0.02);
  EXPECT_EQ(p.theta_a, 0.07);
  EXPECT_NO_THROW(p.validate());
  auto bad = p;
  bad.theta_a = 0.04;
  EXPECT_THROW(bad.validate(), std::invalid_argument);
  bad = p;
  bad.v_min = 1.2;
  EXPECT_THROW(bad.validate(), std::invalid_argument);
  bad = p;
  bad.memory_window = 0;
  EXPECT_THROW(bad.validate(), std::invalid_argument);
  bad = p;
  bad.q3_max = -0.1;
  EXPECT_THROW(bad.validate(), std::invalid_argument);
}

TEST(PowerFlow, WorkedExamples) {
  const GridParams p;
  expect_flows(power_flow(0, 0, 0, 0, 1.0, p), 0, 0, 0, 0, 1.0, 1.0);
  expect_flows(power_flow(1.4, 0.7, 1.0, 0.0, 1.0, p), -1, 0, 0.4, 0.7, 0.967, 0.997);
  expect_flows(power_flow(1.5, 0.75, 1.0, 1.0, 1.02, p), -1, -1, 0.5, -0.25, 1.0125, 1.0725);
}

TEST(PowerFlow, MatchesIndependentTranscription) {
  Rng rng(17);
  for (int i = 0; i < 1000; ++i) {
    GridParams p;
    p.r1 = uniform_real(rng, 0.0, 0.1);
    p.r2 = uniform_real(rng, 0.0, 0.1);
    p.x1 = uniform_real(rng, 0.0, 0.1);
    p.x2 = uniform_real(rng, 0.0, 0.1);
    const double p2 = uniform_real(rng, -2, 2), q2 = uniform_real(rng, -2, 2);
    const double p3 = uniform_real(rng, -2, 2), q3 = uniform_real(rng, -2, 2);
    const double v1 = uniform_real(rng, 0.9, 1.1);
    const auto got = power_flow(p2, q2, p3, q3, v1, p);
    const auto want = oracle::feeder(p2, q2, p3, q3, v1, p.r1, p.x1, p.r2, p.x2);
    expect_flows(got, want.P2, want.Q2, want.P1, want.Q1, want.V2, want.V3);
  }
}

TEST(PowerFlow, VoltageShiftIdentity) {
  const GridParams p;
  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    const double p2 = uniform_real(rng, 1.35, 1.5), q3 = uniform_real(rng, -1, 1);
    const double v1 = uniform_real(rng, 0.9, 1.08), d = uniform_real(rng, -0.05, 0.05);
    const auto a = power_flow(p2, 0.5 * p2, 1.0, q3, v1, p);
    const auto b = power_flow(p2, 0.5 * p2, 1.0, q3, v1 + d, p);
    EXPECT_NEAR(b.V2 - a.V2, d, 1e-12);
    EXPECT_NEAR(b.V3 - a.V3, d, 1e-12);
    EXPECT_EQ(a.P1, b.P1);
    EXPECT_EQ(a.Q1, b.Q1);
  }
}

TEST(PowerFlow, SensitivityIdentities) {
  GridParams p;
  p.x1 = 0.04;
  p.x2 = 0.025;
  Rng rng(4);
  for (int i = 0; i < 200; ++i) {
    const double p2 = uniform_real(rng, 1.35, 1.5), v1 = uniform_real(rng, 0.9, 1.1);
    const double q = uniform_real(rng, -1, 1), dq = uniform_real(rng, -1, 1);
    const auto a = power_flow(p2, 0.5 * p2, 1.0, q, v1, p);
    const auto b = power_flow(p2, 0.5 * p2, 1.0, q + dq, v1, p);
    EXPECT_NEAR(b.V2 - a.V2, p.x1 * dq, 1e-12);
    EXPECT_NEAR(b.V3 - a.V3, (p.x1 + p.x2) * dq, 1e-12);
  }
}

TEST(MoveDomain, Examples) {
  const GridParams p;
  const auto mid = defender_move_domain(1.00, p);
  ASSERT_EQ(mid.size(), 3u);
  EXPECT_NEAR(mid[0], 0.98, 1e-12);
  EXPECT_NEAR(mid[1], 1.00, 1e-12);
  EXPECT_NEAR(mid[2], 1.02, 1e-12);
  const auto top = defender_move_domain(1.10, p);
  ASSERT_EQ(top.size(), 2u);
  EXPECT_NEAR(top[0], 1.08, 1e-12);
  EXPECT_NEAR(top[1], 1.10, 1e-12);
  const auto bottom = defender_move_domain(0.90, p);
  ASSERT_EQ(bottom.size(), 2u);
  EXPECT_NEAR(bottom[0], 0.90, 1e-12);
  EXPECT_NEAR(bottom[1], 0.92, 1e-12);
}

TEST(MoveDomain, ClampedActions) {
  const GridParams p;
  EXPECT_EQ(apply_defender_action(1.10, DefenderAction::kUp, p), 1.10);
  EXPECT_EQ(apply_defender_action(0.90, DefenderAction::kDown, p), 0.90);
  EXPECT_NEAR(apply_defender_action(1.00, DefenderAction::kDown, p), 0.98, 1e-12);
  EXPECT_EQ(apply_defender_action(0.97, DefenderAction::kHold, p), 0.97);
}

TEST(AttackerLevels, Examples) {
  for (double q : attacker_levels(with_q3max(0.0))) EXPECT_EQ(q, 0.0);
  const auto l7 = attacker_levels(with_q3max(0.7));
  EXPECT_EQ(l7[0], -0.7);
  EXPECT_EQ(l7[10], 0.7);
  EXPECT_EQ(l7[5], 0.0);
  EXPECT_NEAR(l7[1], -0.56, 1e-12);
  EXPECT_NEAR(l7[9], 0.56, 1e-12);
  for (std::size_t k = 1; k < 11; ++k) EXPECT_NEAR(l7[k] - l7[k - 1], 0.14, 1e-12);
  const auto l2 = attacker_levels(with_q3max(0.2));
  for (std::size_t k = 1; k < 11; ++k) EXPECT_NEAR(l2[k] - l2[k - 1], 0.04, 1e-12);
  EXPECT_EQ(l2[5], 0.0);
}

TEST(Rewards, Examples) {
  const GridParams p;
  EXPECT_EQ(defender_reward(1.0, 1.0, p), 0.0);
  EXPECT_NEAR(defender_reward(1.05, 0.95, p), -2.0, 1e-12);
  EXPECT_NEAR(defender_reward(0.967, 0.997, p), -0.4392, 1e-12);
  EXPECT_EQ(attacker_reward(1.00, p), 0.0);
  EXPECT_EQ(attacker_reward(1.06, p), 1.0);
  EXPECT_EQ(attacker_reward(0.93, p), 1.0);
  EXPECT_EQ(attacker_reward(1.02, p), 0.0);
}

TEST(Rewards, Ranges) {
  const GridParams p;
  Rng rng(8);
  for (int i = 0; i < 10000; ++i) {
    const double v2 = uniform_real(rng, 0.7, 1.3), v3 = uniform_real(rng, 0.7, 1.3);
    EXPECT_LE(defender_reward(v2, v3, p), 0.0);
    const double ra = attacker_reward(v2, p);
    EXPECT_TRUE(ra == 0.0 || ra == 1.0);
  }
}

TEST(DefenderMetric, Examples) {
  const std::size_t m = 5;
  std::vector<SamplePair> co, anti;
  for (int n = 0; n < 8; ++n) {
    co.push_back({1.0 + 0.01 * n, 0.9 + 0.02 * n});
    anti.push_back({1.0 + 0.01 * n, 0.9 - 0.02 * n});
  }
  EXPECT_DOUBLE_EQ(defender_memory_metric(co, m), 1.0);
  EXPECT_DOUBLE_EQ(defender_memory_metric(anti, m), -1.0);
  // m = 2, step products +1, -1, 0.
  const std::vector<SamplePair> mixed{{1.0, 1.0}, {1.1, 1.1}, {1.2, 1.0}, {1.2, 1.3}};
  EXPECT_DOUBLE_EQ(defender_memory_metric(mixed, 2), 0.0);
  EXPECT_DOUBLE_EQ(defender_memory_metric(std::vector<SamplePair>{{1.0, 1.0}}, m), 0.0);
}

TEST(AttackerMetric, Examples) {
  const GridParams p = with_q3max(0.7);
  // Constant V1 and load, q3 stepping up one level per step: V3 rises by
  // (x1 + x2) * 0.14 and the residual x1 * 0.14 = 0.0042 floors to 0.
  std::vector<SamplePair> up;
  for (std::size_t k = 0; k < 8; ++k) {
    const auto s = make_state(1.4, k, 1.0, p);
    up.push_back({s.V3, s.q3});
  }
  EXPECT_EQ(attacker_memory_metric(up, p), 0.0);
  // One tap step down with q3 fixed: floor(-0.02 / 0.02) = -1.
  const auto a = make_state(1.4, 5, 1.0, p);
  const auto b = make_state(1.4, 5, 1.0 - p.delta_v, p);
  EXPECT_EQ(attacker_memory_metric(std::vector<SamplePair>{{a.V3, a.q3}, {b.V3, b.q3}}, p), -1.0);
  const std::vector<SamplePair> flat(6, SamplePair{1.0, 0.0});
  EXPECT_EQ(attacker_memory_metric(flat, p), 0.0);
}

TEST(AttackerMetric, NegativeIncrementFloorsToMinusOne) {
  // A step down the q3 grid leaves a small negative residual, and floor
  // turns it into -1.
  const GridParams p = with_q3max(0.7);
  const auto a = make_state(1.4, 6, 1.0, p);
  const auto b = make_state(1.4, 5, 1.0, p);
  EXPECT_EQ(attacker_memory_metric(std::vector<SamplePair>{{a.V3, a.q3}, {b.V3, b.q3}}, p), -1.0);
}

TEST(Memory, AdvanceMatchesDefinitionOnRandomTrajectories) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    GridParams p = with_q3max(1.2);
    p.memory_window = 1 + seed % 6;
    Rng rng(seed);
    GridState s = initial_state(p, rng);
    Memories mem = initial_memories(s);
    std::vector<SamplePair> dv{{s.V1, s.V3}}, av{{s.V3, s.q3}};
    for (std::size_t t = 1; t <= 60; ++t) {
      const auto d = defender_action_from_index(uniform_index(rng, 3));
      const auto a = uniform_index(rng, kAttackerLevelCount);
      auto out = transition(s, mem, d, a, rng, p);
      s = out.state;
      mem = out.memories;
      dv.push_back({s.V1, s.V3});
      av.push_back({s.V3, s.q3});
      EXPECT_DOUBLE_EQ(mem.defender.metric, defender_metric_oracle(dv, t, p.memory_window));
      EXPECT_EQ(mem.attacker.metric, attacker_metric_oracle(av, t, p));
      EXPECT_GE(mem.defender.metric, -1.0);
      EXPECT_LE(mem.defender.metric, 1.0);
      EXPECT_EQ(mem.attacker.metric, std::round(mem.attacker.metric));
      EXPECT_LE(std::abs(mem.attacker.metric), static_cast<double>(p.memory_window + 1));
      EXPECT_LE(mem.defender.history.size(), p.memory_window + 2);
      EXPECT_EQ(mem.defender.prev_action, static_cast<std::size_t>(d));
      EXPECT_EQ(mem.attacker.prev_action, a);
    }
  }
}

TEST(Memory, EncodeDecodeRoundTrip) {
  const GridParams p;
  Rng rng(1);
  GridState s = initial_state(p, rng);
  Memories mem = initial_memories(s);
  for (int t = 0; t < 4; ++t) {
    auto out = transition(s, mem, DefenderAction::kUp, 7, rng, p);
    s = out.state;
    mem = out.memories;
  }
  const auto raw_d = encode(mem.defender, p);
  const auto raw_a = encode(mem.attacker, p);
  EXPECT_EQ(raw_d.size(), defender_memory_dim(p));
  EXPECT_EQ(raw_a.size(), attacker_memory_dim(p));
  EXPECT_EQ(encode(decode_defender_memory(raw_d, p), p), raw_d);
  EXPECT_EQ(encode(decode_attacker_memory(raw_a, p), p), raw_a);
  EXPECT_EQ(raw_d[layout::kDefV1], s.V1);
  EXPECT_EQ(raw_a[layout::kAttQ3], s.q3);
}

TEST(Level0Defender, Examples) {
  const GridParams p;
  EXPECT_EQ(level0_defender(1.0, 1.0, 1.0, p), DefenderAction::kHold);
  EXPECT_EQ(level0_defender(1.00, 0.96, 0.99, p), DefenderAction::kUp);
  EXPECT_EQ(level0_defender(1.10, 0.90, 0.93, p), DefenderAction::kHold);
}

TEST(Level0Defender, OptimalOverClampedCandidates) {
  const GridParams p;
  Rng rng(12);
  for (int i = 0; i < 5000; ++i) {
    const double v1 = p.v_min + p.delta_v * static_cast<double>(uniform_index(rng, 11));
    const double v2 = uniform_real(rng, 0.85, 1.15), v3 = uniform_real(rng, 0.85, 1.15);
    const auto choice = level0_defender(v1, v2, v3, p);
    const double shift = apply_defender_action(v1, choice, p) - v1;
    const double got = std::abs((v2 + v3) / 2.0 + shift - 1.0);
    for (double cand : defender_move_domain(v1, p))
      EXPECT_LE(got, std::abs((v2 + v3) / 2.0 + (cand - v1) - 1.0) + 1e-12);
  }
}

TEST(Level0Attacker, Examples) {
  EXPECT_EQ(level0_attacker(0.97, 10, with_q3max(0.7)), 0u);
  EXPECT_EQ(level0_attacker(0.98, 6, with_q3max(0.7)), 7u);
  EXPECT_NEAR(attacker_levels(with_q3max(0.7))[7], 0.28, 1e-12);
  EXPECT_EQ(level0_attacker(1.01, 5, with_q3max(0.2)), 4u);
  EXPECT_NEAR(attacker_levels(with_q3max(0.2))[4], -0.04, 1e-12);
}

TEST(Level0Attacker, StrikeIsTheArgmaxAboveThreshold) {
  Rng rng(13);
  for (int i = 0; i < 5000; ++i) {
    const GridParams p = with_q3max(uniform_real(rng, 0.0, 2.0));
    const auto levels = attacker_levels(p);
    const auto now = uniform_index(rng, kAttackerLevelCount);
    const double v2 = uniform_real(rng, 0.9, 1.1);
    const auto q = level0_attacker(v2, now, p);
    const std::size_t drift = v2 < 1.0 ? std::min<std::size_t>(now + 1, 10) : (now == 0 ? 0 : now - 1);
    auto dev = [&](std::size_t k) { return std::abs(v2 + p.x1 * (levels[k] - levels[now]) - 1.0); };
    double best = 0.0;
    for (std::size_t k = 0; k < kAttackerLevelCount; ++k) best = std::max(best, dev(k));
    if (best > p.theta_a) {
      EXPECT_EQ(dev(q), best);
    } else {
      EXPECT_EQ(q, drift);
    }
    if (q != drift) {
      EXPECT_GT(dev(q), p.theta_a);
    }
  }
}

TEST(Features, Examples) {
  const GridParams p;
  std::vector<double> dm(defender_memory_dim(p), 0.0);
  dm[layout::kDefV1] = 1.10;
  dm[layout::kDefV2] = 1.0;
  dm[layout::kDefV3] = 0.95;
  dm[layout::kDefP1] = 0.4;
  dm[layout::kDefMetric] = -0.5;
  dm[layout::kDefPrev] = 2;
  const auto fd = encode_defender_features(dm, p);
  ASSERT_EQ(fd.size(), kDefenderFeatureDim);
  EXPECT_NEAR(fd[0], 1.0, 1e-12);
  EXPECT_EQ(fd[1], 0.0);
  EXPECT_NEAR(fd[2], -0.5, 1e-12);
  EXPECT_NEAR(fd[3], 0.2, 1e-12);
  EXPECT_EQ(fd[5], -0.5);
  EXPECT_EQ(fd[6], 1.0);

  std::vector<double> am(attacker_memory_dim(p), 0.0);
  am[layout::kAttV2] = 1.0;
  am[layout::kAttV3] = 1.0;
  am[layout::kAttQ3] = 0.7;
  am[layout::kAttMetric] = static_cast<double>(p.memory_window + 1);
  am[layout::kAttPrev] = 10;
  const auto fa = encode_attacker_features(am, p);
  ASSERT_EQ(fa.size(), kAttackerFeatureDim);
  EXPECT_EQ(fa[0], 0.0);
  EXPECT_DOUBLE_EQ(fa[3], 1.0);
  EXPECT_DOUBLE_EQ(fa[4], 1.0);
  EXPECT_DOUBLE_EQ(fa[5], 1.0);
  EXPECT_EQ(encode_attacker_features(am, with_q3max(0.0))[3], 0.0);
}

TEST(Transition, ZeroWidthLoadIsDeterministic) {
  GridParams p;
  p.p2_lo = p.p2_hi = 1.4;
  const auto s0 = make_state(1.4, 5, 1.0, p);
  Rng rng(0);
  const auto out = transition(s0, initial_memories(s0), DefenderAction::kHold, 5, rng, p);
  const auto f = power_flow(1.4, 0.7, 1.0, 0.0, 1.0, p);
  EXPECT_EQ(out.state.V2, f.V2);
  EXPECT_EQ(out.state.V3, f.V3);
  EXPECT_EQ(out.state.P1, f.P1);
  EXPECT_EQ(out.state, s0);
  EXPECT_EQ(out.rewards.defender, defender_reward(f.V2, f.V3, p));
}

TEST(Transition, UpAtTopIsClamped) {
  const GridParams p;
  const auto s0 = make_state(1.4, 5, 1.10, p);
  Rng rng(0);
  EXPECT_EQ(transition(s0, initial_memories(s0), DefenderAction::kUp, 5, rng, p).state.V1, 1.10);
}

TEST(Transition, RandomPlayKeepsEveryInvariant) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(seed);
    const GridParams p = with_q3max(uniform_real(rng, 0.0, 2.0));
    const auto levels = attacker_levels(p);
    GridState s = initial_state(p, rng);
    Memories mem = initial_memories(s);
    for (int t = 0; t < 200; ++t) {
      auto out = transition(s, mem, defender_action_from_index(uniform_index(rng, 3)),
                            uniform_index(rng, kAttackerLevelCount), rng, p);
      const auto& n = out.state;
      const auto f = oracle::feeder(n.p2, n.q2, n.p3, n.q3, n.V1, p.r1, p.x1, p.r2, p.x2);
      EXPECT_NEAR(n.V2, f.V2, 1e-12);
      EXPECT_NEAR(n.V3, f.V3, 1e-12);
      EXPECT_NEAR(n.P1, f.P1, 1e-12);
      EXPECT_NEAR(n.Q1, f.Q1, 1e-12);
      EXPECT_GE(n.V1, p.v_min - 1e-12);
      EXPECT_LE(n.V1, p.v_max + 1e-12);
      EXPECT_LE(std::abs(n.V1 - s.V1), p.delta_v + 1e-12);
      EXPECT_EQ(n.q3, levels[n.q3_level]);
      EXPECT_GE(n.p2, p.p2_lo);
      EXPECT_LE(n.p2, p.p2_hi);
      EXPECT_EQ(n.q2, p.q2_factor * n.p2);
      EXPECT_LE(out.rewards.defender, 0.0);
      EXPECT_LE(out.rewards.attacker, 1.0);
      s = n;
      mem = out.memories;
    }
  }
}

TEST(GridGame, Shapes) {
  const GridGame game{GridParams{}};
  EXPECT_EQ(game.action_count(kDefender), 3u);
  EXPECT_EQ(game.action_count(kAttacker), 11u);
  EXPECT_EQ(game.feature_dim(kDefender), kDefenderFeatureDim);
  EXPECT_EQ(game.feature_dim(kAttacker), kAttackerFeatureDim);
  EXPECT_EQ(game.optimistic_bias(kDefender, 0.95), 0.0);
  EXPECT_EQ(game.optimistic_bias(kAttacker, 0.95), 1.0);
  EXPECT_EQ(game.level0_policies().size(), 2u);
}

TEST(Netform, NetsValidateCleanly) {
  const auto nf = as_netform(with_q3max(0.7));
  EXPECT_TRUE(core::validate(nf.base).empty());
  EXPECT_TRUE(core::validate(nf.kernel).empty());
  EXPECT_TRUE(core::validate_glue(nf.base, nf.kernel, nf.binding).empty());
  EXPECT_TRUE(core::validate_glue(nf.kernel, nf.kernel, nf.binding).empty());
  EXPECT_EQ(nf.kernel.decisions_of(kDefenderId), std::vector<core::NodeId>{"D_D"});
  EXPECT_EQ(nf.kernel.decisions_of(kAttackerId), std::vector<core::NodeId>{"D_A"});
  std::size_t decisions = 0;
  for (const auto& n : nf.kernel.nodes()) decisions += n.is_decision();
  EXPECT_EQ(decisions, 2u);
}

TEST(Netform, StateEncodingRoundTrip) {
  const auto s = make_state(1.42, 3, 1.04, with_q3max(0.7));
  EXPECT_EQ(decode_state(encode_state(s)), s);
}

TEST(Netform, RolloutMatchesNativeLoop) {
  for (double q : {0.2, 1.2}) {
    GridParams p = with_q3max(q);
    p.horizon = 40;
    const GridGame game(p);
    const auto l0 = game.level0_policies();
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const auto a = oracle::native_run(p, l0[0], l0[1], seed);
      const auto b = oracle::netform_run(p, l0[0], l0[1], seed);
      EXPECT_EQ(oracle::compare_runs(a, b), "") << "q3_max " << q << " seed " << seed;
    }
  }
}
