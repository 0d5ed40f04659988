#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace netform::harness {

inline constexpr int kCsvSchemaVersion = 1;

struct SweepRecord {
  double q3_max = 0.0;
  std::size_t defender_level = 0;
  std::size_t attacker_level = 0;
  std::uint64_t seed = 0;
  double defender_avg_reward_per_step = 0.0;
  double attacker_avg_reward_per_step = 0.0;
  std::size_t eval_episodes = 0;
  std::size_t horizon = 0;
  bool operator==(const SweepRecord&) const = default;
};

struct TraceRecord {
  std::size_t t = 0;
  double V1 = 0, V2 = 0, V3 = 0;
  double p2 = 0, q2 = 0, q3 = 0;
  double P1 = 0, Q1 = 0;
  double R_D = 0, R_A = 0;
  double metric_D = 0, metric_A = 0;
  bool operator==(const TraceRecord&) const = default;
};

extern const char* const kSweepHeader;
extern const char* const kTraceHeader;

/// Doubles are written with 17 significant digits, so parsing gives back
/// the same bits.
void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& records);
void write_trace_csv(std::ostream& out, const std::vector<TraceRecord>& records);

/// Throws std::runtime_error on a header mismatch or a malformed row.
std::vector<SweepRecord> read_sweep_csv(std::istream& in);
std::vector<TraceRecord> read_trace_csv(std::istream& in);

}  // namespace netform::harness
