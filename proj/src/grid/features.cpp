#include "netform/grid/features.hpp"

#include "netform/grid/memory.hpp"

namespace netform::grid {

namespace {
constexpr double kVoltageScale = 0.1;
constexpr double kFlowScale = 2.0;

double voltage(double v) { return (v - 1.0) / kVoltageScale; }
}  // namespace

std::vector<double> encode_defender_features(std::span<const double> memory, const GridParams&) {
  using namespace layout;
  return {voltage(memory[kDefV1]),
          voltage(memory[kDefV2]),
          voltage(memory[kDefV3]),
          memory[kDefP1] / kFlowScale,
          memory[kDefQ1] / kFlowScale,
          memory[kDefMetric],
          memory[kDefPrev] - 1.0};
}

std::vector<double> encode_attacker_features(std::span<const double> memory,
                                             const GridParams& params) {
  using namespace layout;
  const double mid = static_cast<double>(kAttackerMidLevel);
  return {voltage(memory[kAttV2]),
          voltage(memory[kAttV3]),
          memory[kAttP3] / kFlowScale,
          params.q3_max > 0.0 ? memory[kAttQ3] / params.q3_max : 0.0,
          memory[kAttMetric] / static_cast<double>(params.memory_window + 1),
          (memory[kAttPrev] - mid) / mid};
}

}  // namespace netform::grid
