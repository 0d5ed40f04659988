#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "netform/harness/config.hpp"
#include "netform/harness/csv.hpp"

namespace netform::harness {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr int kManifestFormatVersion = 1;

class HarnessError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Narrows a command to some cells. An unset field means "all configured";
/// a set q3max or seed need not appear in the config lists.
struct CellSelection {
  std::optional<std::size_t> defender_level;
  std::optional<std::size_t> attacker_level;
  std::optional<double> q3max;
  std::optional<std::uint64_t> seed;
};

/// Shortest decimal that reads back as the same double, e.g. "0.2".
std::string format_q3max(double q3max);
std::string policy_file_name(const std::string& player, std::size_t level, double q3max,
                             std::uint64_t seed);

/// Trains the level-1..k_max hierarchy of every selected (q3max, seed) cell
/// and writes policy files plus manifest.json. A diverging cell is logged and
/// skipped; the others still run. Returns the number of failed cells.
std::size_t cmd_train(const ExperimentConfig& config, const CellSelection& selection,
                      std::ostream& log);

/// Evaluates every selected pairing at every selected (q3max, seed) and
/// writes sweep.csv. Missing policy files raise HarnessError unless
/// train_missing is set, in which case the cell is trained first.
std::vector<SweepRecord> cmd_sweep(const ExperimentConfig& config, const CellSelection& selection,
                                   bool train_missing, std::ostream& log);

/// One pairing at one q3max, every selected seed: prints a summary and
/// writes eval_D{d}_A{a}_q{q}.csv.
std::vector<SweepRecord> cmd_eval(const ExperimentConfig& config, const Pairing& pairing,
                                  double q3max, const CellSelection& selection, std::ostream& out);

/// Replays evaluation episode 0 of the cell step by step and writes
/// trace_D{d}_A{a}_q{q}_s{seed}.csv.
std::vector<TraceRecord> cmd_trace(const ExperimentConfig& config, const Pairing& pairing,
                                   double q3max, std::uint64_t seed);

}  // namespace netform::harness
