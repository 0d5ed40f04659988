#pragma once

#include <span>
#include <vector>

#include "netform/grid/params.hpp"

namespace netform::grid {

inline constexpr std::size_t kDefenderFeatureDim = 7;
inline constexpr std::size_t kAttackerFeatureDim = 6;

/// Network inputs from a raw defender memory, each of order 1: voltages
/// (v - 1) / 0.1, flows v / 2, metric as is, previous action index - 1.
std::vector<double> encode_defender_features(std::span<const double> memory,
                                             const GridParams& params);

/// Attacker inputs: voltages (v - 1) / 0.1, p3 / 2, q3 / q3_max (0 when
/// q3_max is 0), metric / (m + 1), previous level centred on the middle
/// level and scaled to [-1, 1].
std::vector<double> encode_attacker_features(std::span<const double> memory,
                                             const GridParams& params);

}  // namespace netform::grid
