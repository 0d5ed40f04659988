#pragma once

#include <array>
#include <cstddef>
#include <deque>
#include <span>
#include <vector>

#include "netform/grid/params.hpp"
#include "netform/grid/physics.hpp"

namespace netform::grid {

/// A (first, second) sample pair, e.g. (V1, V3) or (V3, q3).
using SamplePair = std::array<double, 2>;

/// sign(x) with sign(0) = 0.
double sign(double x);

/// Defender summary: mean over the last m+1 steps of
/// sign(dV1) * sign(dV3). `samples` holds (V1, V3) oldest first; steps older
/// than the available samples contribute 0. Result lies in [-1, 1].
double defender_memory_metric(std::span<const SamplePair> samples, std::size_t m);

/// Attacker summary: sum over the last m+1 steps of
/// sign(floor((dV3 - dq3 * x2 / V0) / delta_v)). `samples` holds (V3, q3)
/// oldest first; missing steps contribute 0.
double attacker_memory_metric(std::span<const SamplePair> samples, const GridParams& params);

struct DefenderObs {
  double V1, V2, V3, P1, Q1;
};

struct AttackerObs {
  double V2, V3, p3, q3;
};

DefenderObs observe_defender(const GridState& s);
AttackerObs observe_attacker(const GridState& s);

/// What the defender carries from step to step: the current observation, the
/// summary metric, its previous action and the (V1, V3) samples the metric
/// needs (at most m+2, covering m+1 steps).
struct DefenderMemory {
  DefenderObs obs{};
  double metric = 0.0;
  std::size_t prev_action = 1;
  std::deque<SamplePair> history;
};

/// Attacker counterpart; history holds (V3, q3).
struct AttackerMemory {
  AttackerObs obs{};
  double metric = 0.0;
  std::size_t prev_action = kAttackerMidLevel;
  std::deque<SamplePair> history;
};

/// Memory at slice 0: metric 0, previous action Hold / middle level.
DefenderMemory initial_defender_memory(const DefenderObs& obs);
AttackerMemory initial_attacker_memory(const AttackerObs& obs);

/// Memory after observing `obs`, having played `action` to get there.
DefenderMemory advance(const DefenderMemory& prev, const DefenderObs& obs, std::size_t action,
                       const GridParams& params);
AttackerMemory advance(const AttackerMemory& prev, const AttackerObs& obs, std::size_t action,
                       const GridParams& params);

/// Flat layouts used as policy input and as memory node values.
///   defender: V1 V2 V3 P1 Q1 metric prev_action count (V1,V3)*(m+2)
///   attacker: V2 V3 p3 q3 metric prev_action count (V3,q3)*(m+2)
namespace layout {
inline constexpr std::size_t kDefV1 = 0, kDefV2 = 1, kDefV3 = 2, kDefP1 = 3, kDefQ1 = 4,
                             kDefMetric = 5, kDefPrev = 6, kDefCount = 7;
inline constexpr std::size_t kAttV2 = 0, kAttV3 = 1, kAttP3 = 2, kAttQ3 = 3, kAttMetric = 4,
                             kAttPrev = 5, kAttCount = 6;
}  // namespace layout

std::size_t defender_memory_dim(const GridParams& params);
std::size_t attacker_memory_dim(const GridParams& params);

std::vector<double> encode(const DefenderMemory& m, const GridParams& params);
std::vector<double> encode(const AttackerMemory& m, const GridParams& params);
DefenderMemory decode_defender_memory(std::span<const double> raw, const GridParams& params);
AttackerMemory decode_attacker_memory(std::span<const double> raw, const GridParams& params);

}  // namespace netform::grid
