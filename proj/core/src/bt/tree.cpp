#include "btevo/bt/tree.hpp"

#include <algorithm>
#include <string>

namespace btevo::bt {

TreeSpec sel(std::vector<TreeSpec> children) { return {Selector{}, std::move(children)}; }
TreeSpec seq(std::vector<TreeSpec> children) { return {Sequence{}, std::move(children)}; }
TreeSpec cond(Variable v, Comparison c, double threshold) { return {Condition{v, c, threshold}, {}}; }
TreeSpec act(double rudder) { return {Action{rudder}, {}}; }

void check_leaf(const NodeKind& kind) {
  if (const auto* c = std::get_if<Condition>(&kind)) {
    if (!range_of(c->variable).contains(c->threshold))
      throw StructureError("condition threshold " + std::to_string(c->threshold) +
                           " outside range of " + std::string(name_of(c->variable)));
  } else if (const auto* a = std::get_if<Action>(&kind)) {
    if (!kRudderRange.contains(a->rudder))
      throw StructureError("action rudder setting " + std::to_string(a->rudder) +
                           " outside [-1, 1]");
  }
}

BehaviourTree::BehaviourTree() : BehaviourTree(std::vector<Node>{Node{Selector{}, {}}}) {}

BehaviourTree::BehaviourTree(std::vector<Node> preorder) : nodes_(std::move(preorder)) { index(); }

void BehaviourTree::index() {
  subtree_end_.assign(nodes_.size(), 0);
  depth_ = 0;
  std::vector<std::size_t> depths(nodes_.size(), 0);
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    depth_ = std::max(depth_, depths[i]);
    for (auto c : nodes_[i].children) depths[c] = depths[i] + 1;
  }
  for (std::size_t i = nodes_.size(); i-- > 0;) {
    const auto& ch = nodes_[i].children;
    subtree_end_[i] = ch.empty() ? static_cast<NodeIndex>(i + 1) : subtree_end_[ch.back()];
  }
}

BehaviourTree BehaviourTree::from_nodes(std::vector<Node> nodes, NodeIndex root) {
  const auto n = nodes.size();
  if (root >= n) throw StructureError("root index out of range");
  std::vector<int> parents(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_composite(nodes[i].kind) && !nodes[i].children.empty())
      throw StructureError("leaf node " + std::to_string(i) + " has children");
    check_leaf(nodes[i].kind);
    for (auto c : nodes[i].children) {
      if (c >= n) throw StructureError("child index " + std::to_string(c) + " out of range");
      if (c == root) throw StructureError("cycle through root node");
      if (++parents[c] > 1) throw StructureError("node " + std::to_string(c) + " has several parents");
    }
  }
  // Every node now has at most one parent and the root has none; a pre-order
  // walk from the root reaches all nodes exactly when there is no orphan or
  // detached cycle.
  std::vector<Node> pre;
  pre.reserve(n);
  std::vector<NodeIndex> stack{root};
  std::vector<NodeIndex> remap(n, 0);
  std::vector<std::pair<NodeIndex, std::vector<NodeIndex>>> pending;
  while (!stack.empty()) {
    const auto i = stack.back();
    stack.pop_back();
    remap[i] = static_cast<NodeIndex>(pre.size());
    pre.push_back(Node{nodes[i].kind, nodes[i].children});
    const auto& ch = nodes[i].children;
    for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(*it);
  }
  if (pre.size() != n) throw StructureError("node graph has unreachable nodes");
  for (auto& node : pre)
    for (auto& c : node.children) c = remap[c];
  return BehaviourTree(std::move(pre));
}

namespace {
void flatten(const TreeSpec& spec, std::vector<Node>& out) {
  if (!is_composite(spec.kind) && !spec.children.empty())
    throw StructureError("leaf node has children");
  check_leaf(spec.kind);
  const auto self = out.size();
  out.push_back(Node{spec.kind, {}});
  std::vector<NodeIndex> children;
  children.reserve(spec.children.size());
  for (const auto& c : spec.children) {
    children.push_back(static_cast<NodeIndex>(out.size()));
    flatten(c, out);
  }
  out[self].children = std::move(children);
}
}  // namespace

BehaviourTree BehaviourTree::from_spec(const TreeSpec& spec) {
  std::vector<Node> nodes;
  flatten(spec, nodes);
  return BehaviourTree(std::move(nodes));
}

TreeSpec BehaviourTree::subtree_spec(NodeIndex index) const {
  const auto& n = nodes_.at(index);
  TreeSpec spec{n.kind, {}};
  spec.children.reserve(n.children.size());
  for (auto c : n.children) spec.children.push_back(subtree_spec(c));
  return spec;
}

TreeSpec BehaviourTree::to_spec() const { return subtree_spec(root()); }

std::size_t BehaviourTree::max_children() const noexcept {
  std::size_t m = 0;
  for (const auto& n : nodes_) m = std::max(m, n.children.size());
  return m;
}

std::vector<std::size_t> BehaviourTree::node_depths() const {
  std::vector<std::size_t> depths(nodes_.size(), 0);
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    for (auto c : nodes_[i].children) depths[c] = depths[i] + 1;
  return depths;
}

}  // namespace btevo::bt
