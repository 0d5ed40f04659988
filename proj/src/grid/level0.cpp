#include "netform/grid/level0.hpp"

#include <cmath>
#include <stdexcept>

#include "netform/grid/memory.hpp"

namespace netform::grid {

DefenderAction level0_defender(double v1, double v2, double v3, const GridParams& params) {
  DefenderAction best = DefenderAction::kHold;
  double best_dev = 0.0, best_move = 0.0, best_v1 = 0.0;
  bool first = true;
  for (auto action : {DefenderAction::kDown, DefenderAction::kHold, DefenderAction::kUp}) {
    const double next = apply_defender_action(v1, action, params);
    const double shift = next - v1;
    const double dev = std::abs((v2 + shift + v3 + shift) / 2.0 - 1.0);
    const double move = std::abs(shift);
    const bool better = first || dev < best_dev ||
                        (dev == best_dev && (move < best_move || (move == best_move && next < best_v1)));
    if (better) {
      best = action;
      best_dev = dev;
      best_move = move;
      best_v1 = next;
      first = false;
    }
  }
  // A clamped move equals Hold; report it as Hold.
  if (best_move == 0.0) best = DefenderAction::kHold;
  return best;
}

std::size_t level0_attacker(double v2, std::size_t q3_level, const GridParams& params) {
  if (q3_level >= kAttackerLevelCount) throw std::out_of_range("q3 level");
  const auto levels = attacker_levels(params);
  const double q_now = levels[q3_level];
  std::size_t strike = 0;
  double worst = -1.0;
  for (std::size_t k = 0; k < kAttackerLevelCount; ++k) {
    const double dev = std::abs(v2 + params.x1 * (levels[k] - q_now) - 1.0);
    if (dev > worst) {
      worst = dev;
      strike = k;
    }
  }
  if (worst > params.theta_a) return strike;
  if (v2 < 1.0) return q3_level + 1 < kAttackerLevelCount ? q3_level + 1 : q3_level;
  return q3_level > 0 ? q3_level - 1 : 0;
}

std::size_t Level0Defender::act(std::span<const double> memory, Rng&) const {
  using namespace layout;
  return static_cast<std::size_t>(
      level0_defender(memory[kDefV1], memory[kDefV2], memory[kDefV3], params_));
}

std::size_t Level0Attacker::act(std::span<const double> memory, Rng&) const {
  using namespace layout;
  return level0_attacker(memory[kAttV2], static_cast<std::size_t>(memory[kAttPrev]), params_);
}

}  // namespace netform::grid
