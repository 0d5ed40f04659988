#include "netform/harness/config.hpp"

#include <cmath>
#include <fstream>
#include <set>

#include "netform/levelk/policy_io.hpp"

namespace netform::harness {

using nlohmann::json;

void ExperimentConfig::validate() const {
  scenario.validate();
  training.validate();
  if (q3max_sweep.empty()) throw std::invalid_argument("q3max_sweep is empty");
  for (double q : q3max_sweep)
    if (!(q > 0.0) || !std::isfinite(q)) throw std::invalid_argument("q3max_sweep values must be > 0");
  for (const auto& p : pairings)
    if (p.defender_level > k_max || p.attacker_level > k_max)
      throw std::invalid_argument("pairing level above k_max");
  if (eval_episodes < 1) throw std::invalid_argument("eval_episodes must be >= 1");
  if (seeds.empty()) throw std::invalid_argument("seeds is empty");
}

std::vector<Pairing> all_pairings(std::size_t k_max) {
  std::vector<Pairing> out;
  for (std::size_t d = 0; d <= k_max; ++d)
    for (std::size_t a = 0; a <= k_max; ++a) out.push_back({d, a});
  return out;
}

namespace {

void require_object(const json& doc, const std::string& where) {
  if (!doc.is_object()) throw ConfigError(where + " must be an object");
}

void reject_unknown(const json& doc, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [key, _] : doc.items())
    if (!allowed.contains(key)) throw ConfigError("unknown key '" + key + "' in " + where);
}

template <class T>
void read(const json& doc, const char* key, T& field, const std::string& where) {
  if (!doc.contains(key)) return;
  try {
    field = doc.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError(std::string("bad value for '") + key + "' in " + where);
  }
}

#define NETFORM_GRID_FIELDS(X) \
  X(r1) X(r2) X(x1) X(x2) X(v0) X(delta_v) X(v_min) X(v_max) X(eps) X(theta_a) X(q3_max) X(p3) \
  X(p2_lo) X(p2_hi) X(q2_factor) X(memory_window) X(v1_initial) X(horizon)

grid::GridParams scenario_from_json(const json& doc) {
  require_object(doc, "scenario");
  grid::GridParams p;
  std::set<std::string> allowed;
#define X(f) allowed.insert(#f); read(doc, #f, p.f, "scenario");
  NETFORM_GRID_FIELDS(X)
#undef X
  reject_unknown(doc, allowed, "scenario");
  return p;
}

levelk::TrainConfig training_from_json(const json& doc) {
  require_object(doc, "training");
  reject_unknown(doc,
                 {"episodes", "gamma", "learning_rate", "epsilon_start", "epsilon_end",
                  "epsilon_decay", "optimistic_bias", "hidden_layers", "init_scale",
                  "eval_epsilon", "seed"},
                 "training");
  levelk::TrainConfig c;
  read(doc, "episodes", c.episodes, "training");
  read(doc, "gamma", c.gamma, "training");
  read(doc, "learning_rate", c.learning_rate, "training");
  read(doc, "epsilon_start", c.epsilon_start, "training");
  read(doc, "epsilon_end", c.epsilon_end, "training");
  read(doc, "epsilon_decay", c.epsilon_decay, "training");
  read(doc, "hidden_layers", c.hidden_layers, "training");
  read(doc, "init_scale", c.init_scale, "training");
  read(doc, "eval_epsilon", c.eval_epsilon, "training");
  read(doc, "seed", c.seed, "training");
  if (doc.contains("optimistic_bias") && !doc.at("optimistic_bias").is_null()) {
    double b = 0.0;
    read(doc, "optimistic_bias", b, "training");
    c.optimistic_bias = b;
  }
  return c;
}

}  // namespace

ExperimentConfig config_from_json(const json& doc) {
  require_object(doc, "config");
  reject_unknown(doc,
                 {"scenario", "training", "k_max", "q3max_sweep", "pairings", "eval_episodes",
                  "seeds", "output_dir"},
                 "config");
  ExperimentConfig c;
  if (doc.contains("scenario")) c.scenario = scenario_from_json(doc.at("scenario"));
  if (doc.contains("training")) c.training = training_from_json(doc.at("training"));
  read(doc, "k_max", c.k_max, "config");
  read(doc, "q3max_sweep", c.q3max_sweep, "config");
  read(doc, "eval_episodes", c.eval_episodes, "config");
  read(doc, "seeds", c.seeds, "config");
  read(doc, "output_dir", c.output_dir, "config");
  if (doc.contains("pairings")) {
    const auto& list = doc.at("pairings");
    if (!list.is_array()) throw ConfigError("pairings must be a list");
    for (const auto& item : list) {
      require_object(item, "pairing");
      reject_unknown(item, {"defender", "attacker"}, "pairing");
      if (!item.contains("defender") || !item.contains("attacker"))
        throw ConfigError("pairing needs both 'defender' and 'attacker'");
      Pairing p;
      read(item, "defender", p.defender_level, "pairing");
      read(item, "attacker", p.attacker_level, "pairing");
      c.pairings.push_back(p);
    }
  } else {
    c.pairings = all_pairings(c.k_max);
  }
  try {
    c.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return c;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw ConfigError("cannot parse " + path.string() + ": " + e.what());
  }
  return config_from_json(doc);
}

json to_json(const grid::GridParams& p) {
  json doc = json::object();
#define X(f) doc[#f] = p.f;
  NETFORM_GRID_FIELDS(X)
#undef X
  return doc;
}

json to_json(const ExperimentConfig& c) {
  json pairings = json::array();
  for (const auto& p : c.pairings)
    pairings.push_back({{"defender", p.defender_level}, {"attacker", p.attacker_level}});
  return {{"scenario", to_json(c.scenario)},
          {"training", levelk::to_json(c.training)},
          {"k_max", c.k_max},
          {"q3max_sweep", c.q3max_sweep},
          {"pairings", pairings},
          {"eval_episodes", c.eval_episodes},
          {"seeds", c.seeds},
          {"output_dir", c.output_dir}};
}

}  // namespace netform::harness
