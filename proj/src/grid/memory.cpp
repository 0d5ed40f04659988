#include "netform/grid/memory.hpp"

#include <cmath>
#include <stdexcept>

namespace netform::grid {

double sign(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

namespace {

// Differences available in the window: the last min(m+1, n-1) steps.
std::size_t first_step(std::size_t n, std::size_t m) { return n > m + 2 ? n - (m + 1) : 1; }

template <typename Sample>
void push_bounded(std::deque<Sample>& history, Sample s, std::size_t m) {
  history.push_back(s);
  while (history.size() > m + 2) history.pop_front();
}

}  // namespace

double defender_memory_metric(std::span<const SamplePair> samples, std::size_t m) {
  double sum = 0.0;
  for (std::size_t n = first_step(samples.size(), m); n < samples.size(); ++n)
    sum += sign(samples[n][0] - samples[n - 1][0]) * sign(samples[n][1] - samples[n - 1][1]);
  return sum / static_cast<double>(m + 1);
}

double attacker_memory_metric(std::span<const SamplePair> samples, const GridParams& params) {
  double sum = 0.0;
  for (std::size_t n = first_step(samples.size(), params.memory_window); n < samples.size(); ++n) {
    const double dv3 = samples[n][0] - samples[n - 1][0];
    const double dq3 = samples[n][1] - samples[n - 1][1];
    sum += sign(std::floor((dv3 - dq3 * params.x2 / params.v0) / params.delta_v));
  }
  return sum;
}

DefenderObs observe_defender(const GridState& s) { return {s.V1, s.V2, s.V3, s.P1, s.Q1}; }

AttackerObs observe_attacker(const GridState& s) { return {s.V2, s.V3, s.p3, s.q3}; }

DefenderMemory initial_defender_memory(const DefenderObs& obs) {
  DefenderMemory m;
  m.obs = obs;
  m.history.push_back({obs.V1, obs.V3});
  return m;
}

AttackerMemory initial_attacker_memory(const AttackerObs& obs) {
  AttackerMemory m;
  m.obs = obs;
  m.history.push_back({obs.V3, obs.q3});
  return m;
}

DefenderMemory advance(const DefenderMemory& prev, const DefenderObs& obs, std::size_t action,
                       const GridParams& params) {
  DefenderMemory m;
  m.obs = obs;
  m.prev_action = action;
  m.history = prev.history;
  push_bounded(m.history, SamplePair{obs.V1, obs.V3}, params.memory_window);
  const std::vector<SamplePair> window(m.history.begin(), m.history.end());
  m.metric = defender_memory_metric(window, params.memory_window);
  return m;
}

AttackerMemory advance(const AttackerMemory& prev, const AttackerObs& obs, std::size_t action,
                       const GridParams& params) {
  AttackerMemory m;
  m.obs = obs;
  m.prev_action = action;
  m.history = prev.history;
  push_bounded(m.history, SamplePair{obs.V3, obs.q3}, params.memory_window);
  const std::vector<SamplePair> window(m.history.begin(), m.history.end());
  m.metric = attacker_memory_metric(window, params);
  return m;
}

std::size_t defender_memory_dim(const GridParams& params) {
  return layout::kDefCount + 1 + 2 * (params.memory_window + 2);
}

std::size_t attacker_memory_dim(const GridParams& params) {
  return layout::kAttCount + 1 + 2 * (params.memory_window + 2);
}

namespace {

void append_history(std::vector<double>& raw, const std::deque<SamplePair>& history,
                    std::size_t m) {
  raw.push_back(static_cast<double>(history.size()));
  for (const auto& s : history) raw.insert(raw.end(), s.begin(), s.end());
  raw.resize(raw.size() + 2 * (m + 2 - history.size()), 0.0);
}

std::deque<SamplePair> read_history(std::span<const double> raw, std::size_t offset,
                                    std::size_t m) {
  const auto count = static_cast<std::size_t>(raw[offset]);
  if (count > m + 2) throw std::invalid_argument("memory history longer than the window");
  std::deque<SamplePair> out;
  for (std::size_t k = 0; k < count; ++k)
    out.push_back({raw[offset + 1 + 2 * k], raw[offset + 2 + 2 * k]});
  return out;
}

}  // namespace

std::vector<double> encode(const DefenderMemory& m, const GridParams& params) {
  std::vector<double> raw{m.obs.V1, m.obs.V2, m.obs.V3, m.obs.P1, m.obs.Q1, m.metric,
                          static_cast<double>(m.prev_action)};
  raw.reserve(defender_memory_dim(params));
  append_history(raw, m.history, params.memory_window);
  return raw;
}

std::vector<double> encode(const AttackerMemory& m, const GridParams& params) {
  std::vector<double> raw{m.obs.V2, m.obs.V3, m.obs.p3, m.obs.q3, m.metric,
                          static_cast<double>(m.prev_action)};
  raw.reserve(attacker_memory_dim(params));
  append_history(raw, m.history, params.memory_window);
  return raw;
}

DefenderMemory decode_defender_memory(std::span<const double> raw, const GridParams& params) {
  using namespace layout;
  if (raw.size() != defender_memory_dim(params))
    throw std::invalid_argument("defender memory has the wrong length");
  DefenderMemory m;
  m.obs = {raw[kDefV1], raw[kDefV2], raw[kDefV3], raw[kDefP1], raw[kDefQ1]};
  m.metric = raw[kDefMetric];
  m.prev_action = static_cast<std::size_t>(raw[kDefPrev]);
  m.history = read_history(raw, kDefCount, params.memory_window);
  return m;
}

AttackerMemory decode_attacker_memory(std::span<const double> raw, const GridParams& params) {
  using namespace layout;
  if (raw.size() != attacker_memory_dim(params))
    throw std::invalid_argument("attacker memory has the wrong length");
  AttackerMemory m;
  m.obs = {raw[kAttV2], raw[kAttV3], raw[kAttP3], raw[kAttQ3]};
  m.metric = raw[kAttMetric];
  m.prev_action = static_cast<std::size_t>(raw[kAttPrev]);
  m.history = read_history(raw, kAttCount, params.memory_window);
  return m;
}

}  // namespace netform::grid
