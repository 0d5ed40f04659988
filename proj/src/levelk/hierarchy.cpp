#include "netform/levelk/hierarchy.hpp"

namespace netform::levelk {

Rng training_rng(std::uint64_t seed, std::size_t player, std::size_t level) {
  return derive_rng(seed, {0x7261696eu, player, level});
}

LevelKHierarchy build_hierarchy(const EpisodicGame& game, std::vector<PolicyRef> level0s,
                                std::size_t max_level, const TrainConfig& config,
                                const TrainingObserver& observer) {
  const auto players = game.player_count();
  if (level0s.size() != players) throw std::invalid_argument("need one level-0 policy per player");
  for (const auto& p : level0s)
    if (!p) throw std::invalid_argument("level-0 policy missing");

  LevelKHierarchy h;
  h.policies.resize(players);
  for (std::size_t p = 0; p < players; ++p) h.policies[p].push_back(level0s[p]);

  for (std::size_t k = 1; k <= max_level; ++k) {
    std::vector<PolicyRef> opponents(players);
    for (std::size_t p = 0; p < players; ++p) opponents[p] = h.policies[p][k - 1];
    for (std::size_t p = 0; p < players; ++p) {
      if (observer) observer({p, k, k - 1}, h);
      auto rng = training_rng(config.seed, p, k);
      h.policies[p].push_back(
          std::make_shared<const QPolicy>(train_level(game, p, opponents, config, rng)));
    }
  }
  return h;
}

}  // namespace netform::levelk
