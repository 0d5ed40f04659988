#include "netform/levelk/sarsa.hpp"

#include <cmath>

namespace netform::levelk {

void TrainConfig::validate() const {
  auto in_unit = [](double v) { return v >= 0.0 && v <= 1.0; };
  if (!(gamma >= 0.0 && gamma < 1.0)) throw std::invalid_argument("gamma must lie in [0, 1)");
  if (!(learning_rate > 0.0)) throw std::invalid_argument("learning_rate must be > 0");
  if (!in_unit(epsilon_start) || !in_unit(epsilon_end) || !in_unit(eval_epsilon))
    throw std::invalid_argument("exploration rates must lie in [0, 1]");
  if (epsilon_end > epsilon_start) throw std::invalid_argument("epsilon_end exceeds epsilon_start");
  if (!(epsilon_decay > 0.0 && epsilon_decay <= 1.0))
    throw std::invalid_argument("epsilon_decay must lie in (0, 1]");
  if (!(init_scale >= 0.0)) throw std::invalid_argument("init_scale must be >= 0");
  if (optimistic_bias && !std::isfinite(*optimistic_bias))
    throw std::invalid_argument("optimistic_bias must be finite");
  for (auto w : hidden_layers)
    if (w < 1) throw std::invalid_argument("hidden layer widths must be >= 1");
}

double epsilon_schedule(std::size_t episode, const TrainConfig& config) {
  return config.epsilon_end + (config.epsilon_start - config.epsilon_end) *
                                  std::pow(config.epsilon_decay, static_cast<double>(episode));
}

void semi_batch_update(approx::Network& network, std::span<const Transition> transitions,
                       double gamma, double learning_rate) {
  if (transitions.empty()) return;
  approx::Workspace ws;
  std::vector<double> targets;
  targets.reserve(transitions.size());
  for (const auto& tr : transitions) {
    double target = tr.r;
    if (!tr.terminal) target += gamma * network.forward(tr.s_next, ws)[tr.a_next];
    if (!std::isfinite(target)) throw std::domain_error("non-finite SARSA target");
    targets.push_back(target);
  }
  std::vector<double> grad(network.params().size(), 0.0);
  const double weight = 1.0 / static_cast<double>(transitions.size());
  for (std::size_t k = 0; k < transitions.size(); ++k)
    network.accumulate_td_gradient(transitions[k].s, transitions[k].a, targets[k], weight, grad, ws);
  network.apply_update(grad, learning_rate);
}

QPolicy train_level(const EpisodicGame& game, std::size_t trainee,
                    std::span<const PolicyRef> opponents, const TrainConfig& config, Rng& rng) {
  config.validate();
  const auto players = game.player_count();
  if (trainee >= players) throw std::invalid_argument("trainee index out of range");
  if (opponents.size() != players) throw std::invalid_argument("need one opponent slot per player");
  for (std::size_t p = 0; p < players; ++p)
    if (p != trainee && !opponents[p])
      throw std::invalid_argument("missing opponent policy for player " + std::to_string(p));

  const approx::NetworkSpec spec{game.feature_dim(trainee), config.hidden_layers,
                                 game.action_count(trainee)};
  const double bias = config.optimistic_bias.value_or(game.optimistic_bias(trainee, config.gamma));
  QPolicy policy(approx::Network::init(spec, config.init_scale, bias, rng), config.epsilon_start,
                 game.encoder(trainee));

  const auto horizon = game.horizon();
  std::vector<Transition> transitions;
  transitions.reserve(horizon);
  std::vector<std::size_t> actions(players, 0);

  for (std::size_t episode = 0; episode < config.episodes; ++episode) {
    policy.set_epsilon(epsilon_schedule(episode, config));
    transitions.clear();
    auto play = game.start(rng);
    for (std::size_t t = 0; t < horizon; ++t) {
      for (std::size_t p = 0; p < players; ++p) {
        if (p != trainee) {
          actions[p] = opponents[p]->act(play->memory(p), rng);
          continue;
        }
        auto features = policy.encoder()(play->memory(trainee));
        actions[p] = select_action(policy, features, rng);
        if (!transitions.empty()) {
          transitions.back().s_next = features;
          transitions.back().a_next = actions[p];
        }
        transitions.push_back({std::move(features), actions[p], 0.0, {}, 0, false});
      }
      transitions.back().r = play->step(actions, rng)[trainee];
    }
    transitions.back().terminal = true;
    transitions.back().s_next = transitions.back().s;

    try {
      semi_batch_update(policy.network(), transitions, config.gamma, config.learning_rate);
    } catch (const std::domain_error&) {
      throw DivergenceError(episode);
    }
    if (!policy.network().all_finite()) throw DivergenceError(episode);
  }

  policy.set_epsilon(config.eval_epsilon);
  return policy;
}

}  // namespace netform::levelk
