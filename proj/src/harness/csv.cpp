#include "netform/harness/csv.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string_view>

#include <fmt/format.h>

namespace netform::harness {

const char* const kSweepHeader =
    "q3_max,defender_level,attacker_level,seed,defender_avg_reward_per_step,"
    "attacker_avg_reward_per_step,eval_episodes,horizon";
const char* const kTraceHeader = "t,V1,V2,V3,p2,q2,q3,P1,Q1,R_D,R_A,metric_D,metric_A";

namespace {

std::string num(double v) { return fmt::format("{:.17g}", v); }

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) return out;
    start = comma + 1;
  }
}

template <class T>
T parse(std::string_view field, std::size_t line_no) {
  T value{};
  const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || end != field.data() + field.size())
    throw std::runtime_error("bad CSV field '" + std::string(field) + "' on line " +
                             std::to_string(line_no));
  return value;
}

// Calls row(fields, line_no) for every data line after checking the header.
template <class F>
void read_rows(std::istream& in, const char* header, std::size_t columns, F row) {
  std::string line;
  if (!std::getline(in, line) || line != header) throw std::runtime_error("unexpected CSV header");
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto fields = split(line);
    if (fields.size() != columns)
      throw std::runtime_error("wrong column count on line " + std::to_string(line_no));
    row(fields, line_no);
  }
}

}  // namespace

void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& records) {
  out << kSweepHeader << '\n';
  for (const auto& r : records)
    out << num(r.q3_max) << ',' << r.defender_level << ',' << r.attacker_level << ',' << r.seed
        << ',' << num(r.defender_avg_reward_per_step) << ',' << num(r.attacker_avg_reward_per_step)
        << ',' << r.eval_episodes << ',' << r.horizon << '\n';
}

void write_trace_csv(std::ostream& out, const std::vector<TraceRecord>& records) {
  out << kTraceHeader << '\n';
  for (const auto& r : records) {
    out << r.t;
    for (double v : {r.V1, r.V2, r.V3, r.p2, r.q2, r.q3, r.P1, r.Q1, r.R_D, r.R_A, r.metric_D,
                     r.metric_A})
      out << ',' << num(v);
    out << '\n';
  }
}

std::vector<SweepRecord> read_sweep_csv(std::istream& in) {
  std::vector<SweepRecord> out;
  read_rows(in, kSweepHeader, 8, [&](const auto& f, std::size_t n) {
    out.push_back({parse<double>(f[0], n), parse<std::size_t>(f[1], n), parse<std::size_t>(f[2], n),
                   parse<std::uint64_t>(f[3], n), parse<double>(f[4], n), parse<double>(f[5], n),
                   parse<std::size_t>(f[6], n), parse<std::size_t>(f[7], n)});
  });
  return out;
}

std::vector<TraceRecord> read_trace_csv(std::istream& in) {
  std::vector<TraceRecord> out;
  read_rows(in, kTraceHeader, 13, [&](const auto& f, std::size_t n) {
    TraceRecord r;
    r.t = parse<std::size_t>(f[0], n);
    double* fields[] = {&r.V1, &r.V2, &r.V3, &r.p2, &r.q2, &r.q3, &r.P1,
                        &r.Q1, &r.R_D, &r.R_A, &r.metric_D, &r.metric_A};
    for (std::size_t i = 0; i < 12; ++i) *fields[i] = parse<double>(f[i + 1], n);
    out.push_back(r);
  });
  return out;
}

}  // namespace netform::harness
