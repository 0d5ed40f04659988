#include "netform/core/semi_bayes_net.hpp"

#include <algorithm>
#include <queue>
#include <unordered_map>
#include <unordered_set>

namespace netform::core {

bool NodeSpec::is_input() const {
  const auto* chance = std::get_if<ChanceNode>(&kind);
  return chance != nullptr && !chance->kernel;
}

SemiBayesNet& SemiBayesNet::add_player(PlayerId player) {
  players_.insert(std::move(player));
  return *this;
}

SemiBayesNet& SemiBayesNet::add_chance(NodeId id, VariableSpace space,
                                       std::vector<NodeId> parents, ChanceKernel kernel) {
  nodes_.push_back({std::move(id), space, std::move(parents), ChanceNode{std::move(kernel)}});
  return *this;
}

SemiBayesNet& SemiBayesNet::add_input(NodeId id, VariableSpace space) {
  nodes_.push_back({std::move(id), space, {}, ChanceNode{}});
  return *this;
}

SemiBayesNet& SemiBayesNet::add_decision(NodeId id, VariableSpace space,
                                         std::vector<NodeId> parents, PlayerId owner) {
  nodes_.push_back({std::move(id), space, std::move(parents), DecisionNode{std::move(owner)}});
  return *this;
}

const NodeSpec* SemiBayesNet::find(std::string_view id) const {
  for (const auto& n : nodes_)
    if (n.id == id) return &n;
  return nullptr;
}

std::optional<std::size_t> SemiBayesNet::index_of(std::string_view id) const {
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    if (nodes_[i].id == id) return i;
  return std::nullopt;
}

std::vector<NodeId> SemiBayesNet::decisions_of(const PlayerId& player) const {
  std::vector<NodeId> out;
  for (const auto& n : nodes_) {
    if (const auto* d = std::get_if<DecisionNode>(&n.kind); d && d->owner == player)
      out.push_back(n.id);
  }
  return out;
}

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kDuplicateId: return "duplicate-id";
    case ViolationKind::kDanglingParent: return "dangling-parent";
    case ViolationKind::kDuplicateParent: return "duplicate-parent";
    case ViolationKind::kCycle: return "cycle";
    case ViolationKind::kUnknownOwner: return "unknown-owner";
    case ViolationKind::kOwnership: return "ownership";
    case ViolationKind::kUnknownSource: return "unknown-source";
    case ViolationKind::kUnknownTarget: return "unknown-target";
    case ViolationKind::kNonRootTarget: return "non-root-target";
    case ViolationKind::kSpaceMismatch: return "space-mismatch";
    case ViolationKind::kNonInjective: return "non-injective";
  }
  return "unknown";
}

namespace {

// Kahn's algorithm over the first occurrence of each id, always releasing the
// ready node declared earliest. Returns the emitted indices; a short result
// means the remaining nodes sit on or behind a cycle.
std::vector<std::size_t> stable_kahn(const SemiBayesNet& net) {
  const auto& nodes = net.nodes();
  std::unordered_map<std::string_view, std::size_t> first;
  for (std::size_t i = 0; i < nodes.size(); ++i) first.emplace(nodes[i].id, i);

  std::vector<std::size_t> indegree(nodes.size(), 0);
  std::vector<std::vector<std::size_t>> children(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (first.at(nodes[i].id) != i) continue;
    std::unordered_set<std::string_view> seen;
    for (const auto& p : nodes[i].parents) {
      auto it = first.find(p);
      if (it == first.end() || !seen.insert(p).second) continue;
      children[it->second].push_back(i);
      ++indegree[i];
    }
  }

  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (first.at(nodes[i].id) == i && indegree[i] == 0) ready.push(i);

  std::vector<std::size_t> order;
  while (!ready.empty()) {
    auto i = ready.top();
    ready.pop();
    order.push_back(i);
    for (auto c : children[i])
      if (--indegree[c] == 0) ready.push(c);
  }
  return order;
}

std::size_t unique_count(const SemiBayesNet& net) {
  std::unordered_set<std::string_view> ids;
  for (const auto& n : net.nodes()) ids.insert(n.id);
  return ids.size();
}

// A node left over by Kahn's algorithm that actually lies on a cycle (not just
// downstream of one): walk parents among leftovers until a node repeats.
NodeId node_on_cycle(const SemiBayesNet& net, const std::vector<std::size_t>& emitted) {
  const auto& nodes = net.nodes();
  std::unordered_set<std::string_view> done;
  for (auto i : emitted) done.insert(nodes[i].id);
  const NodeSpec* cur = nullptr;
  for (const auto& n : nodes)
    if (!done.contains(n.id)) {
      cur = &n;
      break;
    }
  std::unordered_set<std::string_view> visited;
  while (cur != nullptr && visited.insert(cur->id).second) {
    const NodeSpec* next = nullptr;
    for (const auto& p : cur->parents) {
      const auto* pn = net.find(p);
      if (pn != nullptr && !done.contains(pn->id)) {
        next = pn;
        break;
      }
    }
    cur = next;
  }
  return cur != nullptr ? cur->id : NodeId{};
}

}  // namespace

std::vector<Violation> validate(const SemiBayesNet& net) {
  std::vector<Violation> out;
  const auto& nodes = net.nodes();

  std::unordered_set<std::string_view> ids;
  for (const auto& n : nodes)
    if (!ids.insert(n.id).second)
      out.push_back({ViolationKind::kDuplicateId, n.id, "node id '" + n.id + "' is declared twice"});

  for (const auto& n : nodes) {
    std::unordered_set<std::string_view> seen;
    for (const auto& p : n.parents) {
      if (!ids.contains(p))
        out.push_back({ViolationKind::kDanglingParent, n.id,
                       "node '" + n.id + "' has unknown parent '" + p + "'"});
      if (!seen.insert(p).second)
        out.push_back({ViolationKind::kDuplicateParent, n.id,
                       "node '" + n.id + "' lists parent '" + p + "' twice"});
    }
  }

  auto emitted = stable_kahn(net);
  if (emitted.size() != unique_count(net)) {
    auto node = node_on_cycle(net, emitted);
    out.push_back({ViolationKind::kCycle, node, "parent relation has a cycle through '" + node + "'"});
  }

  std::map<PlayerId, int> owned;
  for (const auto& p : net.players()) owned[p] = 0;
  for (const auto& n : nodes) {
    const auto* d = std::get_if<DecisionNode>(&n.kind);
    if (d == nullptr) continue;
    auto it = owned.find(d->owner);
    if (it == owned.end()) {
      out.push_back({ViolationKind::kUnknownOwner, n.id,
                     "decision node '" + n.id + "' is owned by undeclared player '" + d->owner + "'"});
    } else {
      ++it->second;
    }
  }
  for (const auto& [player, count] : owned)
    if (count != 1)
      out.push_back({ViolationKind::kOwnership, player,
                     "player '" + player + "' owns " + std::to_string(count) +
                         " decision nodes, expected exactly 1"});
  return out;
}

std::vector<Violation> validate_glue(const SemiBayesNet& prev, const SemiBayesNet& kernel,
                                     const GlueBinding& binding) {
  std::vector<Violation> out;
  std::unordered_map<std::string_view, std::string_view> target_owner;
  for (const auto& [src, dst] : binding.pairs) {
    const auto* s = prev.find(src);
    const auto* d = kernel.find(dst);
    if (s == nullptr)
      out.push_back({ViolationKind::kUnknownSource, src, "binding source '" + src + "' does not exist"});
    if (d == nullptr) {
      out.push_back({ViolationKind::kUnknownTarget, dst, "binding target '" + dst + "' does not exist"});
    } else if (!d->is_root()) {
      out.push_back({ViolationKind::kNonRootTarget, dst,
                     "binding target '" + dst + "' has parents in the kernel"});
    }
    if (s != nullptr && d != nullptr && !(s->space == d->space))
      out.push_back({ViolationKind::kSpaceMismatch, dst,
                     "'" + src + "' is " + s->space.describe() + " but '" + dst + "' is " +
                         d->space.describe()});
    auto [it, inserted] = target_owner.emplace(dst, src);
    if (!inserted)
      out.push_back({ViolationKind::kNonInjective, dst,
                     "'" + std::string(it->second) + "' and '" + src + "' are both bound to '" + dst + "'"});
  }
  return out;
}

std::vector<NodeId> topological_order(const SemiBayesNet& net) {
  for (const auto& n : net.nodes())
    for (const auto& p : n.parents)
      if (net.find(p) == nullptr)
        throw std::invalid_argument("node '" + n.id + "' has unknown parent '" + p + "'");

  auto emitted = stable_kahn(net);
  if (emitted.size() != unique_count(net)) throw CycleError(node_on_cycle(net, emitted));

  std::vector<NodeId> order;
  order.reserve(emitted.size());
  for (auto i : emitted) order.push_back(net.nodes()[i].id);
  return order;
}

}  // namespace netform::core
