#pragma once

#include <cstddef>

#include "netform/grid/params.hpp"
#include "netform/grid/rules.hpp"
#include "netform/levelk/policy.hpp"

namespace netform::grid {

/// Myopic operator: the reachable tap setting that brings the mean of V2 and
/// V3 closest to 1, predicting both to shift one-for-one with V1. Ties go to
/// the smaller move, then to the lower V1.
DefenderAction level0_defender(double v1, double v2, double v3, const GridParams& params);

/// Drift-and-strike attacker. Projects V2 for every q3 setting through
/// dV2/dq3 = x1. If the largest projected deviation exceeds theta_a it jumps
/// to that setting; otherwise it drifts one level up when V2 < 1 and one
/// level down otherwise, stopping at the ends of the grid.
std::size_t level0_attacker(double v2, std::size_t q3_level, const GridParams& params);

class Level0Defender final : public levelk::Policy {
 public:
  explicit Level0Defender(GridParams params) : params_(params) {}
  std::size_t act(std::span<const double> memory, Rng& rng) const override;
  std::string describe() const override { return "level-0 defender"; }

 private:
  GridParams params_;
};

class Level0Attacker final : public levelk::Policy {
 public:
  explicit Level0Attacker(GridParams params) : params_(params) {}
  std::size_t act(std::span<const double> memory, Rng& rng) const override;
  std::string describe() const override { return "level-0 attacker"; }

 private:
  GridParams params_;
};

}  // namespace netform::grid
