#pragma once

#include <array>
#include <cstddef>
#include <string_view>
#include <vector>

#include "netform/grid/params.hpp"

namespace netform::grid {

enum class DefenderAction : std::size_t { kDown = 0, kHold = 1, kUp = 2 };

std::string_view to_string(DefenderAction action);
DefenderAction defender_action_from_index(std::size_t index);

/// Tap settings reachable from V1 in one step, ascending, duplicates removed
/// where a limit clamps Up or Down onto Hold.
std::vector<double> defender_move_domain(double v1, const GridParams& params);

/// New V1 after the action, clamped to [v_min, v_max].
double apply_defender_action(double v1, DefenderAction action, const GridParams& params);

/// Eleven evenly spaced q3 settings from -q3_max to +q3_max, exactly 0 in the
/// middle.
std::array<double, kAttackerLevelCount> attacker_levels(const GridParams& params);

/// -((V2 - 1)/eps)^2 - ((V3 - 1)/eps)^2.
double defender_reward(double v2, double v3, const GridParams& params);

/// One point for V2 strictly above 1 + eps, one for strictly below 1 - eps.
double attacker_reward(double v2, const GridParams& params);

}  // namespace netform::grid
