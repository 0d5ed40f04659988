#include "netform/harness/commands.hpp"

#include <fstream>

#include <fmt/format.h>

#include "netform/grid/scenario.hpp"
#include "netform/levelk/evaluate.hpp"
#include "netform/levelk/hierarchy.hpp"
#include "netform/levelk/policy_io.hpp"

namespace netform::harness {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const char* const kPlayerNames[] = {"defender", "attacker"};

std::vector<double> selected_q3max(const ExperimentConfig& c, const CellSelection& s) {
  if (s.q3max) {
    if (!(*s.q3max > 0.0)) throw HarnessError("--q3max must be > 0");
    return {*s.q3max};
  }
  return c.q3max_sweep;
}

std::vector<std::uint64_t> selected_seeds(const ExperimentConfig& c, const CellSelection& s) {
  return s.seed ? std::vector<std::uint64_t>{*s.seed} : c.seeds;
}

std::vector<Pairing> selected_pairings(const ExperimentConfig& c, const CellSelection& s) {
  std::vector<Pairing> out;
  for (const auto& p : c.pairings)
    if ((!s.defender_level || *s.defender_level == p.defender_level) &&
        (!s.attacker_level || *s.attacker_level == p.attacker_level))
      out.push_back(p);
  if (out.empty() && s.defender_level && s.attacker_level)
    out.push_back({*s.defender_level, *s.attacker_level});
  return out;
}

grid::GridParams scenario_at(const ExperimentConfig& c, double q3max) {
  auto p = c.scenario;
  p.q3_max = q3max;
  return p;
}

fs::path output_dir(const ExperimentConfig& c) {
  fs::path dir(c.output_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir))
    throw HarnessError("cannot create output directory " + dir.string());
  return dir;
}

// Temporary file plus rename, so readers never see half a file.
template <class Writer>
void write_atomically(const fs::path& path, Writer write) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw HarnessError("cannot write " + tmp.string());
    write(out);
    if (!out) throw HarnessError("failed writing " + tmp.string());
  }
  fs::rename(tmp, path);
}

json run_entry(std::size_t player, std::size_t level, double q, std::uint64_t seed) {
  return {{"player", kPlayerNames[player]},
          {"level", level},
          {"q3max", q},
          {"seed", seed},
          {"file", policy_file_name(kPlayerNames[player], level, q, seed)}};
}

bool same_cell(const json& a, const json& b) {
  return a.at("player") == b.at("player") && a.at("level") == b.at("level") &&
         a.at("q3max") == b.at("q3max") && a.at("seed") == b.at("seed");
}

// Keeps runs recorded by earlier invocations with the same config, replaced
// cell by cell by this invocation's runs.
void write_manifest(const fs::path& dir, const ExperimentConfig& config, const json& runs) {
  const auto path = dir / "manifest.json";
  const auto config_doc = to_json(config);
  json merged = json::array();
  if (std::ifstream in(path); in) {
    try {
      const auto old = json::parse(in);
      if (old.at("config") == config_doc)
        for (const auto& r : old.at("runs")) {
          bool replaced = false;
          for (const auto& n : runs) replaced = replaced || same_cell(r, n);
          if (!replaced) merged.push_back(r);
        }
    } catch (const json::exception&) {
      // unreadable manifest: start over
    }
  }
  for (const auto& r : runs) merged.push_back(r);

  const json manifest = {{"format", "netform.manifest"},
                         {"version", kManifestFormatVersion},
                         {"versions",
                          {{"netform", kVersion},
                           {"policy_format", levelk::kPolicyFormatVersion},
                           {"csv_schema", kCsvSchemaVersion}}},
                         {"config", config_doc},
                         {"runs", merged}};
  write_atomically(path, [&](std::ostream& out) { out << manifest.dump(2) << '\n'; });
}

// Trains one (q3max, seed) cell and saves its policies. Returns the manifest
// entries, with a failure entry when a run diverges.
json train_cell(const ExperimentConfig& config, const fs::path& dir, double q, std::uint64_t seed,
                std::ostream& log) {
  const grid::GridGame game(scenario_at(config, q));
  auto training = config.training;
  training.seed = seed;
  json runs = json::array();
  levelk::TrainingRun current{};
  try {
    const auto h = levelk::build_hierarchy(
        game, game.level0_policies(), config.k_max, training, [&](const levelk::TrainingRun& run, const levelk::LevelKHierarchy&) {
          current = run;
          log << fmt::format("training {} L{} vs L{} at q3max={} seed={}\n",
                             kPlayerNames[run.player], run.level, run.opponent_level,
                             format_q3max(q), seed)
              << std::flush;
        });
    levelk::PolicyMetadata meta;
    meta.seed = seed;
    meta.context = {{"scenario", to_json(game.params())}};
    for (std::size_t k = 1; k <= config.k_max; ++k)
      for (std::size_t p = 0; p < 2; ++p) {
        meta.player = kPlayerNames[p];
        meta.level = k;
        const auto& policy = dynamic_cast<const levelk::QPolicy&>(*h.at(p, k));
        auto entry = run_entry(p, k, q, seed);
        levelk::save_policy(dir / entry.at("file").get<std::string>(), policy, meta, training);
        entry["status"] = "ok";
        runs.push_back(entry);
      }
  } catch (const levelk::DivergenceError& e) {
    auto entry = run_entry(current.player, current.level, q, seed);
    entry["status"] = "diverged";
    entry["error"] = e.what();
    runs.push_back(entry);
    log << fmt::format("error: {} L{} at q3max={} seed={}: {}\n", kPlayerNames[current.player],
                       current.level, format_q3max(q), seed, e.what());
  }
  return runs;
}

levelk::PolicyRef policy_for(const grid::GridGame& game, const fs::path& dir, std::size_t player,
                             std::size_t level, double q, std::uint64_t seed) {
  if (level == 0) return game.level0_policies().at(player);
  const auto path = dir / policy_file_name(kPlayerNames[player], level, q, seed);
  if (!fs::exists(path))
    throw HarnessError("missing policy file " + path.string() + " (run `train` first)");
  try {
    return std::make_shared<const levelk::QPolicy>(levelk::load_policy(path, game, player));
  } catch (const std::runtime_error& e) {
    throw HarnessError(e.what());
  }
}

bool cell_complete(const fs::path& dir, const Pairing& pairing, double q, std::uint64_t seed) {
  if (pairing.defender_level > 0 &&
      !fs::exists(dir / policy_file_name(kPlayerNames[0], pairing.defender_level, q, seed)))
    return false;
  if (pairing.attacker_level > 0 &&
      !fs::exists(dir / policy_file_name(kPlayerNames[1], pairing.attacker_level, q, seed)))
    return false;
  return true;
}

SweepRecord evaluate_cell(const ExperimentConfig& config, const fs::path& dir,
                          const Pairing& pairing, double q, std::uint64_t seed,
                          levelk::EvalReport* report_out = nullptr) {
  const grid::GridGame game(scenario_at(config, q));
  const std::vector<levelk::PolicyRef> policies{
      policy_for(game, dir, 0, pairing.defender_level, q, seed),
      policy_for(game, dir, 1, pairing.attacker_level, q, seed)};
  auto report = levelk::evaluate(game, policies, config.eval_episodes, seed);
  SweepRecord r{q,
                pairing.defender_level,
                pairing.attacker_level,
                seed,
                report.mean_reward_per_step[0],
                report.mean_reward_per_step[1],
                report.episodes,
                report.horizon};
  if (report_out) *report_out = std::move(report);
  return r;
}

void check_levels(const ExperimentConfig& config, const Pairing& pairing) {
  if (pairing.defender_level > config.k_max || pairing.attacker_level > config.k_max)
    throw HarnessError(fmt::format("pairing D{}/A{} exceeds k_max={}", pairing.defender_level,
                                   pairing.attacker_level, config.k_max));
}

}  // namespace

std::string format_q3max(double q3max) { return fmt::format("{}", q3max); }

std::string policy_file_name(const std::string& player, std::size_t level, double q3max,
                             std::uint64_t seed) {
  return fmt::format("{}_L{}_q{}_s{}.json", player, level, format_q3max(q3max), seed);
}

std::size_t cmd_train(const ExperimentConfig& config, const CellSelection& selection,
                      std::ostream& log) {
  const auto dir = output_dir(config);
  json runs = json::array();
  std::size_t failed = 0;
  if (config.k_max > 0)
    for (double q : selected_q3max(config, selection))
      for (auto seed : selected_seeds(config, selection)) {
        const auto cell = train_cell(config, dir, q, seed, log);
        for (const auto& r : cell) {
          if (r.at("status") != "ok") ++failed;
          runs.push_back(r);
        }
      }
  write_manifest(dir, config, runs);
  return failed;
}

std::vector<SweepRecord> cmd_sweep(const ExperimentConfig& config, const CellSelection& selection,
                                   bool train_missing, std::ostream& log) {
  const auto dir = output_dir(config);
  const auto pairings = selected_pairings(config, selection);
  if (pairings.empty()) throw HarnessError("no configured pairing matches the selection");
  for (const auto& p : pairings) check_levels(config, p);

  std::vector<SweepRecord> records;
  for (double q : selected_q3max(config, selection)) {
    for (auto seed : selected_seeds(config, selection)) {
      bool complete = true;
      for (const auto& p : pairings) complete = complete && cell_complete(dir, p, q, seed);
      if (!complete && train_missing) {
        CellSelection cell;
        cell.q3max = q;
        cell.seed = seed;
        if (cmd_train(config, cell, log) > 0)
          throw HarnessError(fmt::format("training diverged at q3max={} seed={}", format_q3max(q), seed));
      }
    }
    for (const auto& p : pairings)
      for (auto seed : selected_seeds(config, selection))
        records.push_back(evaluate_cell(config, dir, p, q, seed));
  }
  write_atomically(dir / "sweep.csv", [&](std::ostream& out) { write_sweep_csv(out, records); });
  return records;
}

std::vector<SweepRecord> cmd_eval(const ExperimentConfig& config, const Pairing& pairing,
                                  double q3max, const CellSelection& selection, std::ostream& out) {
  if (!(q3max > 0.0)) throw HarnessError("q3max must be > 0");
  check_levels(config, pairing);
  const auto dir = output_dir(config);
  std::vector<SweepRecord> records;
  for (auto seed : selected_seeds(config, selection)) {
    levelk::EvalReport report;
    records.push_back(evaluate_cell(config, dir, pairing, q3max, seed, &report));
    out << fmt::format("D{}/A{} q3max={} seed={} episodes={} horizon={}\n", pairing.defender_level,
                       pairing.attacker_level, format_q3max(q3max), seed, report.episodes,
                       report.horizon);
    for (std::size_t p = 0; p < 2; ++p)
      out << fmt::format("  {:<8}  mean reward/step {:>12.6f}  episode stddev {:>10.6f}\n",
                         kPlayerNames[p], report.mean_reward_per_step[p], report.episode_stddev[p]);
  }
  const auto name = fmt::format("eval_D{}_A{}_q{}.csv", pairing.defender_level,
                                pairing.attacker_level, format_q3max(q3max));
  write_atomically(dir / name, [&](std::ostream& o) { write_sweep_csv(o, records); });
  return records;
}

std::vector<TraceRecord> cmd_trace(const ExperimentConfig& config, const Pairing& pairing,
                                   double q3max, std::uint64_t seed) {
  if (!(q3max > 0.0)) throw HarnessError("q3max must be > 0");
  check_levels(config, pairing);
  const auto dir = output_dir(config);
  const grid::GridGame game(scenario_at(config, q3max));
  const std::vector<levelk::PolicyRef> policies{
      policy_for(game, dir, 0, pairing.defender_level, q3max, seed),
      policy_for(game, dir, 1, pairing.attacker_level, q3max, seed)};

  // Same stream as evaluation episode 0 of this cell.
  auto rng = levelk::episode_rng(seed, 0);
  auto play = game.start_grid(rng);
  std::vector<TraceRecord> records;
  std::vector<std::size_t> actions(2);
  for (std::size_t t = 1; t <= game.horizon(); ++t) {
    for (std::size_t p = 0; p < 2; ++p) actions[p] = policies[p]->act(play->memory(p), rng);
    const auto rewards = play->step(actions, rng);
    const auto& s = play->state();
    const auto& m = play->memories();
    records.push_back({t, s.V1, s.V2, s.V3, s.p2, s.q2, s.q3, s.P1, s.Q1, rewards[0], rewards[1],
                       m.defender.metric, m.attacker.metric});
  }
  const auto name = fmt::format("trace_D{}_A{}_q{}_s{}.csv", pairing.defender_level,
                                pairing.attacker_level, format_q3max(q3max), seed);
  write_atomically(dir / name, [&](std::ostream& o) { write_trace_csv(o, records); });
  return records;
}

}  // namespace netform::harness
