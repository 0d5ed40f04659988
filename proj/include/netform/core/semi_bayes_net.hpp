#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "netform/core/random.hpp"
#include "netform/core/variable_space.hpp"

namespace netform::core {

using PlayerId = std::string;
using NodeId = std::string;

/// Parent values in the order of NodeSpec::parents.
using ParentValues = std::span<const Value>;

/// Sampling procedure of a chance node.
using ChanceKernel = std::function<Value(ParentValues, Rng&)>;

struct ChanceNode {
  /// Empty for a glued input: a root whose value is supplied by the
  /// preceding slice.
  ChanceKernel kernel;
};

struct DecisionNode {
  PlayerId owner;
};

struct NodeSpec {
  NodeId id;
  VariableSpace space;
  std::vector<NodeId> parents;
  std::variant<ChanceNode, DecisionNode> kind;

  bool is_decision() const { return std::holds_alternative<DecisionNode>(kind); }
  bool is_input() const;
  bool is_root() const { return parents.empty(); }
};

/// A DAG of chance and decision nodes. Decision nodes carry no distribution;
/// players fill them in. Built incrementally, then treated as immutable.
class SemiBayesNet {
 public:
  SemiBayesNet& add_player(PlayerId player);
  SemiBayesNet& add_chance(NodeId id, VariableSpace space, std::vector<NodeId> parents,
                           ChanceKernel kernel);
  /// Root whose value arrives through a glue binding.
  SemiBayesNet& add_input(NodeId id, VariableSpace space);
  SemiBayesNet& add_decision(NodeId id, VariableSpace space, std::vector<NodeId> parents,
                             PlayerId owner);

  const std::vector<NodeSpec>& nodes() const { return nodes_; }
  const std::set<PlayerId>& players() const { return players_; }

  /// First node with this id, or nullptr.
  const NodeSpec* find(std::string_view id) const;
  std::optional<std::size_t> index_of(std::string_view id) const;

  /// Decision node ids owned by the player, in declaration order.
  std::vector<NodeId> decisions_of(const PlayerId& player) const;

 private:
  std::vector<NodeSpec> nodes_;
  std::set<PlayerId> players_;
};

/// Maps node ids of the preceding slice onto root ids of the kernel.
struct GlueBinding {
  std::map<NodeId, NodeId> pairs;
};

enum class ViolationKind {
  kDuplicateId,
  kDanglingParent,
  kDuplicateParent,
  kCycle,
  kUnknownOwner,
  kOwnership,
  kUnknownSource,
  kUnknownTarget,
  kNonRootTarget,
  kSpaceMismatch,
  kNonInjective,
};

struct Violation {
  ViolationKind kind;
  NodeId node;
  std::string message;
};

std::string_view to_string(ViolationKind kind);

/// Every structural problem of the net; empty when it is valid.
std::vector<Violation> validate(const SemiBayesNet& net);

/// Problems with gluing `kernel` onto `prev` through `binding`.
std::vector<Violation> validate_glue(const SemiBayesNet& prev, const SemiBayesNet& kernel,
                                     const GlueBinding& binding);

class CycleError : public std::runtime_error {
 public:
  CycleError(NodeId node)
      : std::runtime_error("cycle through node '" + node + "'"), node_(std::move(node)) {}
  const NodeId& node() const { return node_; }

 private:
  NodeId node_;
};

/// Parents before children; ties resolved by declaration order.
/// Throws CycleError if the parent relation is cyclic.
std::vector<NodeId> topological_order(const SemiBayesNet& net);

}  // namespace netform::core
