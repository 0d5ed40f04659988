#include "netform/grid/physics.hpp"

#include "netform/grid/rules.hpp"

namespace netform::grid {

Flows power_flow(double p2, double q2, double p3, double q3, double v1, const GridParams& params) {
  Flows f;
  f.P2 = -p3;
  f.Q2 = -q3;
  f.P1 = f.P2 + p2;
  f.Q1 = f.Q2 + q2;
  f.V2 = v1 - (params.r1 * f.P1 + params.x1 * f.Q1);
  f.V3 = f.V2 - (params.r2 * f.P2 + params.x2 * f.Q2);
  return f;
}

GridState make_state(double p2, std::size_t q3_level, double v1, const GridParams& params) {
  GridState s;
  s.p2 = p2;
  s.q2 = params.q2_factor * p2;
  s.p3 = params.p3;
  s.q3_level = q3_level;
  s.q3 = attacker_levels(params).at(q3_level);
  s.V1 = v1;
  const auto f = power_flow(s.p2, s.q2, s.p3, s.q3, s.V1, params);
  s.P2 = f.P2;
  s.Q2 = f.Q2;
  s.P1 = f.P1;
  s.Q1 = f.Q1;
  s.V2 = f.V2;
  s.V3 = f.V3;
  return s;
}

}  // namespace netform::grid
