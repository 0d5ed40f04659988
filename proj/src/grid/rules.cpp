#include "netform/grid/rules.hpp"

#include <algorithm>
#include <stdexcept>

namespace netform::grid {

std::string_view to_string(DefenderAction action) {
  switch (action) {
    case DefenderAction::kDown: return "down";
    case DefenderAction::kHold: return "hold";
    case DefenderAction::kUp: return "up";
  }
  return "?";
}

DefenderAction defender_action_from_index(std::size_t index) {
  if (index >= kDefenderActionCount) throw std::out_of_range("defender action index");
  return static_cast<DefenderAction>(index);
}

std::vector<double> defender_move_domain(double v1, const GridParams& params) {
  std::vector<double> out{std::max(params.v_min, v1 - params.delta_v), v1,
                          std::min(params.v_max, v1 + params.delta_v)};
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

double apply_defender_action(double v1, DefenderAction action, const GridParams& params) {
  switch (action) {
    case DefenderAction::kDown: return std::max(params.v_min, v1 - params.delta_v);
    case DefenderAction::kHold: return v1;
    case DefenderAction::kUp: return std::min(params.v_max, v1 + params.delta_v);
  }
  return v1;
}

std::array<double, kAttackerLevelCount> attacker_levels(const GridParams& params) {
  std::array<double, kAttackerLevelCount> out{};
  const auto mid = static_cast<double>(kAttackerMidLevel);
  for (std::size_t k = 0; k < kAttackerLevelCount; ++k)
    out[k] = params.q3_max * (static_cast<double>(k) - mid) / mid;
  return out;
}

double defender_reward(double v2, double v3, const GridParams& params) {
  const double a = (v2 - 1.0) / params.eps;
  const double b = (v3 - 1.0) / params.eps;
  return -a * a - b * b;
}

double attacker_reward(double v2, const GridParams& params) {
  auto step = [](double x) { return x > 0.0 ? 1.0 : 0.0; };
  return step(v2 - (1.0 + params.eps)) + step((1.0 - params.eps) - v2);
}

}  // namespace netform::grid
