#include "netform/levelk/policy_io.hpp"

#include <fstream>
#include <stdexcept>

#include "netform/approx/serialization.hpp"

namespace netform::levelk {

nlohmann::json to_json(const TrainConfig& c) {
  nlohmann::json doc = {{"episodes", c.episodes},
                        {"gamma", c.gamma},
                        {"learning_rate", c.learning_rate},
                        {"epsilon_start", c.epsilon_start},
                        {"epsilon_end", c.epsilon_end},
                        {"epsilon_decay", c.epsilon_decay},
                        {"hidden_layers", c.hidden_layers},
                        {"init_scale", c.init_scale},
                        {"eval_epsilon", c.eval_epsilon},
                        {"seed", c.seed}};
  doc["optimistic_bias"] = c.optimistic_bias ? nlohmann::json(*c.optimistic_bias) : nlohmann::json();
  return doc;
}

TrainConfig train_config_from_json(const nlohmann::json& doc) {
  TrainConfig c;
  c.episodes = doc.at("episodes").get<std::size_t>();
  c.gamma = doc.at("gamma").get<double>();
  c.learning_rate = doc.at("learning_rate").get<double>();
  c.epsilon_start = doc.at("epsilon_start").get<double>();
  c.epsilon_end = doc.at("epsilon_end").get<double>();
  c.epsilon_decay = doc.at("epsilon_decay").get<double>();
  c.hidden_layers = doc.at("hidden_layers").get<std::vector<std::size_t>>();
  c.init_scale = doc.at("init_scale").get<double>();
  c.eval_epsilon = doc.at("eval_epsilon").get<double>();
  c.seed = doc.at("seed").get<std::uint64_t>();
  if (const auto& b = doc.at("optimistic_bias"); !b.is_null()) c.optimistic_bias = b.get<double>();
  c.validate();
  return c;
}

nlohmann::json policy_to_json(const QPolicy& policy, const PolicyMetadata& meta,
                              const TrainConfig& config) {
  return {{"format", "netform.policy"},
          {"version", kPolicyFormatVersion},
          {"player", meta.player},
          {"level", meta.level},
          {"seed", meta.seed},
          {"epsilon", policy.epsilon()},
          {"training", to_json(config)},
          {"context", meta.context},
          {"network", approx::to_json(policy.network())}};
}

void save_policy(const std::filesystem::path& path, const QPolicy& policy,
                 const PolicyMetadata& meta, const TrainConfig& config) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << policy_to_json(policy, meta, config).dump(2) << '\n';
    if (!out) throw std::runtime_error("failed writing " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

QPolicy load_policy(const std::filesystem::path& path, const EpisodicGame& game,
                    std::size_t player_index, PolicyMetadata* meta) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("missing policy file " + path.string());
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("cannot parse " + path.string() + ": " + e.what());
  }
  if (doc.value("format", "") != "netform.policy" || doc.value("version", 0) != kPolicyFormatVersion)
    throw std::runtime_error(path.string() + " is not a version " +
                             std::to_string(kPolicyFormatVersion) + " policy file");
  auto net = approx::network_from_json(doc.at("network"));
  if (net.spec().input_dim != game.feature_dim(player_index) ||
      net.spec().output_dim != game.action_count(player_index))
    throw std::runtime_error(path.string() + " does not match the game's player shape");
  if (meta != nullptr) {
    meta->player = doc.at("player").get<std::string>();
    meta->level = doc.at("level").get<std::size_t>();
    meta->seed = doc.at("seed").get<std::uint64_t>();
    meta->context = doc.value("context", nlohmann::json::object());
  }
  return QPolicy(std::move(net), doc.at("epsilon").get<double>(), game.encoder(player_index));
}

}  // namespace netform::levelk
