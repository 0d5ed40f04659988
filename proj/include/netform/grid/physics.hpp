#pragma once

#include <cstddef>

#include "netform/grid/params.hpp"

namespace netform::grid {

/// Line flows and downstream voltages of the linearized feeder.
struct Flows {
  double P2 = 0.0;
  double Q2 = 0.0;
  double P1 = 0.0;
  double Q1 = 0.0;
  double V2 = 0.0;
  double V3 = 0.0;
};

/// LinDistFlow for the three-node feeder:
///   P2 = -p3, Q2 = -q3, P1 = P2 + p2, Q1 = Q2 + q2,
///   V2 = V1 - (r1 P1 + x1 Q1), V3 = V2 - (r2 P2 + x2 Q2).
Flows power_flow(double p2, double q2, double p3, double q3, double v1, const GridParams& params);

/// One time slice of the circuit. Flows and voltages are always the
/// power_flow of the injections and V1.
struct GridState {
  double p2 = 0.0;
  double q2 = 0.0;
  double p3 = 0.0;
  double q3 = 0.0;
  std::size_t q3_level = 0;
  double V1 = 1.0;
  double P2 = 0.0;
  double Q2 = 0.0;
  double P1 = 0.0;
  double Q1 = 0.0;
  double V2 = 1.0;
  double V3 = 1.0;

  bool operator==(const GridState&) const = default;
};

GridState make_state(double p2, std::size_t q3_level, double v1, const GridParams& params);

}  // namespace netform::grid
