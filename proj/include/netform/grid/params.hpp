#pragma once

#include <cstddef>

namespace netform::grid {

inline constexpr std::size_t kDefenderActionCount = 3;
inline constexpr std::size_t kAttackerLevelCount = 11;
inline constexpr std::size_t kAttackerMidLevel = 5;

/// Three-node radial feeder, per-unit. Node 1 is the substation whose
/// voltage the defender sets; node 2 a lumped load; node 3 the generator
/// whose reactive output the attacker controls.
struct GridParams {
  double r1 = 0.03;
  double r2 = 0.03;
  double x1 = 0.03;
  double x2 = 0.03;
  double v0 = 1.0;
  /// Transformer tap step and limits.
  double delta_v = 0.02;
  double v_min = 0.90;
  double v_max = 1.10;
  /// Halfwidth of the good-voltage band around 1.
  double eps = 0.05;
  /// Projected deviation of V2 that triggers a level-0 strike.
  double theta_a = 0.07;
  double q3_max = 0.7;
  double p3 = 1.0;
  double p2_lo = 1.35;
  double p2_hi = 1.5;
  double q2_factor = 0.5;
  /// Memory window m: metrics sum over the last m+1 steps.
  std::size_t memory_window = 5;
  double v1_initial = 0.99;
  std::size_t horizon = 100;

  /// Throws std::invalid_argument when an invariant is broken.
  void validate() const;
};

}  // namespace netform::grid
