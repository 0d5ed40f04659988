#include "netform/levelk/evaluate.hpp"

#include <cmath>

namespace netform::levelk {

Rng episode_rng(std::uint64_t seed, std::size_t episode) {
  return derive_rng(seed, {0x6576616cu, episode});
}

EvalReport evaluate(const EpisodicGame& game, std::span<const PolicyRef> policies,
                    std::size_t episodes, std::uint64_t seed) {
  const auto players = game.player_count();
  if (episodes < 1) throw std::invalid_argument("evaluation needs at least one episode");
  if (policies.size() != players) throw std::invalid_argument("need one policy per player");
  for (const auto& p : policies)
    if (!p) throw std::invalid_argument("missing policy");

  EvalReport report;
  report.episodes = episodes;
  report.horizon = game.horizon();
  report.per_episode.assign(players, std::vector<double>(episodes, 0.0));

  std::vector<std::size_t> actions(players);
  for (std::size_t e = 0; e < episodes; ++e) {
    auto rng = episode_rng(seed, e);
    auto play = game.start(rng);
    std::vector<double> totals(players, 0.0);
    for (std::size_t t = 0; t < report.horizon; ++t) {
      for (std::size_t p = 0; p < players; ++p) actions[p] = policies[p]->act(play->memory(p), rng);
      auto rewards = play->step(actions, rng);
      for (std::size_t p = 0; p < players; ++p) totals[p] += rewards[p];
    }
    for (std::size_t p = 0; p < players; ++p)
      report.per_episode[p][e] = totals[p] / static_cast<double>(report.horizon);
  }

  for (std::size_t p = 0; p < players; ++p) {
    double sum = 0.0;
    for (double v : report.per_episode[p]) sum += v;
    const double mean = sum / static_cast<double>(episodes);
    double ss = 0.0;
    for (double v : report.per_episode[p]) ss += (v - mean) * (v - mean);
    report.mean_reward_per_step.push_back(mean);
    report.episode_stddev.push_back(episodes > 1 ? std::sqrt(ss / static_cast<double>(episodes - 1)) : 0.0);
  }
  return report;
}

}  // namespace netform::levelk
