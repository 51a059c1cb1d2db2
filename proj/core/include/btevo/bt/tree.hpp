#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "btevo/bt/blackboard.hpp"

namespace btevo::bt {

using NodeIndex = std::uint32_t;

enum class Comparison { GreaterThan, LessThan };

struct Selector {
  friend bool operator==(const Selector&, const Selector&) = default;
};
struct Sequence {
  friend bool operator==(const Sequence&, const Sequence&) = default;
};
struct Condition {
  Variable variable = Variable::WindowX;
  Comparison comparison = Comparison::GreaterThan;
  double threshold = 0.0;
  friend bool operator==(const Condition&, const Condition&) = default;
};
struct Action {
  double rudder = 0.0;
  friend bool operator==(const Action&, const Action&) = default;
};

using NodeKind = std::variant<Selector, Sequence, Condition, Action>;

inline bool is_composite(const NodeKind& k) noexcept {
  return std::holds_alternative<Selector>(k) || std::holds_alternative<Sequence>(k);
}

struct Node {
  NodeKind kind;
  std::vector<NodeIndex> children;
  friend bool operator==(const Node&, const Node&) = default;
};

/// Thrown when a node graph is not a well-formed rooted tree, or a leaf
/// carries parameters outside its declared range.
class StructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Recursive value form used to build trees by hand and by the genetic
/// operators. Convert with BehaviourTree::from_spec / to_spec.
struct TreeSpec {
  NodeKind kind;
  std::vector<TreeSpec> children;
  friend bool operator==(const TreeSpec&, const TreeSpec&) = default;
};

TreeSpec sel(std::vector<TreeSpec> children = {});
TreeSpec seq(std::vector<TreeSpec> children = {});
TreeSpec cond(Variable v, Comparison c, double threshold);
TreeSpec act(double rudder);

/// Immutable behaviour tree. Nodes are stored in pre-order, so the root is
/// node 0 and every subtree occupies a contiguous index range.
class BehaviourTree {
 public:
  /// Single empty Selector.
  BehaviourTree();

  /// Validates that `nodes` form a rooted tree at `root` and renumbers them
  /// into pre-order. Throws StructureError on cycles, shared children,
  /// orphans, out-of-range indices, leaves with children, or leaf parameters
  /// outside their ranges.
  static BehaviourTree from_nodes(std::vector<Node> nodes, NodeIndex root);
  static BehaviourTree from_spec(const TreeSpec& spec);

  TreeSpec to_spec() const;
  TreeSpec subtree_spec(NodeIndex index) const;

  const std::vector<Node>& nodes() const noexcept { return nodes_; }
  const Node& node(NodeIndex i) const { return nodes_.at(i); }
  static constexpr NodeIndex root() noexcept { return 0; }

  /// Number of nodes, root included.
  std::size_t size() const noexcept { return nodes_.size(); }
  /// Longest root-to-leaf edge count.
  std::size_t depth() const noexcept { return depth_; }
  /// Largest child count over all composites.
  std::size_t max_children() const noexcept;

  /// Depth of every node (root = 0), indexed like nodes().
  std::vector<std::size_t> node_depths() const;
  /// One past the last pre-order index of the subtree rooted at i.
  NodeIndex subtree_end(NodeIndex i) const { return subtree_end_.at(i); }
  std::size_t subtree_size(NodeIndex i) const { return subtree_end(i) - i; }

  friend bool operator==(const BehaviourTree& a, const BehaviourTree& b) {
    return a.nodes_ == b.nodes_;
  }

 private:
  explicit BehaviourTree(std::vector<Node> preorder);
  void index();

  std::vector<Node> nodes_;
  std::vector<NodeIndex> subtree_end_;
  std::size_t depth_ = 0;
};

/// Throws StructureError if a leaf parameter is outside its declared range.
void check_leaf(const NodeKind& kind);

}  // namespace btevo::bt
