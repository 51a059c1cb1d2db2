#include "btevo/evo/operators.hpp"

#include <algorithm>
#include <numeric>

namespace btevo::evo {

using bt::BehaviourTree;
using bt::NodeIndex;
using bt::TreeSpec;

NodeClass draw_node_class(bool at_depth_limit, Rng& rng) {
  if (at_depth_limit) {
    return std::uniform_int_distribution<int>(0, 1)(rng) == 0 ? NodeClass::Action : NodeClass::Condition;
  }
  switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
    case 0: return NodeClass::Composite;
    case 1: return NodeClass::Action;
    default: return NodeClass::Condition;
  }
}

bt::Condition random_condition(Rng& rng) {
  const auto v = bt::kAllVariables[std::uniform_int_distribution<std::size_t>(0, 3)(rng)];
  const auto cmp = std::uniform_int_distribution<int>(0, 1)(rng) == 0 ? bt::Comparison::GreaterThan
                                                                       : bt::Comparison::LessThan;
  const auto range = bt::range_of(v);
  return {v, cmp, std::uniform_real_distribution<double>(range.lo, range.hi)(rng)};
}

bt::Action random_action(Rng& rng) {
  return {std::uniform_real_distribution<double>(bt::kRudderRange.lo, bt::kRudderRange.hi)(rng)};
}

namespace {

TreeSpec composite(std::size_t depth, const EAParams& params, Rng& rng, bool selector) {
  TreeSpec t{selector ? bt::NodeKind{bt::Selector{}} : bt::NodeKind{bt::Sequence{}}, {}};
  t.children.reserve(params.max_children);
  for (std::size_t i = 0; i < params.max_children; ++i) t.children.push_back(grow_node(depth + 1, params, rng));
  return t;
}

}  // namespace

TreeSpec grow_node(std::size_t depth, const EAParams& params, Rng& rng) {
  switch (draw_node_class(depth >= params.max_depth, rng)) {
    case NodeClass::Composite:
      return composite(depth, params, rng, std::uniform_int_distribution<int>(0, 1)(rng) == 0);
    case NodeClass::Action: return {random_action(rng), {}};
    case NodeClass::Condition: return {random_condition(rng), {}};
  }
  return {};
}

BehaviourTree grow(const EAParams& params, Rng& rng) {
  return BehaviourTree::from_spec(composite(0, params, rng, true));
}

std::size_t pick_from_subgroup(std::span<const Candidate> subgroup) {
  if (subgroup.size() < 2) return 0;
  std::vector<std::size_t> order(subgroup.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (subgroup[a].fitness != subgroup[b].fitness) return subgroup[a].fitness > subgroup[b].fitness;
    return subgroup[a].size < subgroup[b].size;
  });
  return subgroup[order[1]].size < subgroup[order[0]].size ? order[1] : order[0];
}

std::size_t tournament_select(std::span<const Candidate> population, const EAParams& params, Rng& rng) {
  const std::size_t n = population.size();
  const std::size_t k = std::min(n, params.tournament_size());
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  for (std::size_t i = 0; i < k; ++i) {
    const auto j = std::uniform_int_distribution<std::size_t>(i, n - 1)(rng);
    std::swap(idx[i], idx[j]);
  }
  std::vector<Candidate> group(k);
  for (std::size_t i = 0; i < k; ++i) group[i] = population[idx[i]];
  return idx[pick_from_subgroup(group)];
}

namespace {

/// Copy of `tree` with the subtree at `point` replaced by `donor`'s subtree
/// at `donor_point`. Pre-order storage makes both contiguous ranges.
BehaviourTree graft(const BehaviourTree& tree, NodeIndex point, const BehaviourTree& donor,
                    NodeIndex donor_point) {
  std::vector<bt::Node> nodes;
  nodes.reserve(tree.size() - tree.subtree_size(point) + donor.subtree_size(donor_point));
  const auto end = tree.subtree_end(point);
  const auto donor_end = donor.subtree_end(donor_point);
  const auto removed = static_cast<std::int64_t>(end - point);
  const auto added = static_cast<std::int64_t>(donor_end - donor_point);
  const auto shift_after = added - removed;

  for (NodeIndex i = 0; i < point; ++i) {
    bt::Node n = tree.node(i);
    for (auto& c : n.children)
      if (c >= end) c = static_cast<NodeIndex>(c + shift_after);
    nodes.push_back(std::move(n));
  }
  for (NodeIndex i = donor_point; i < donor_end; ++i) {
    bt::Node n = donor.node(i);
    for (auto& c : n.children) c = c - donor_point + point;
    nodes.push_back(std::move(n));
  }
  for (NodeIndex i = end; i < tree.size(); ++i) {
    bt::Node n = tree.node(i);
    for (auto& c : n.children) c = static_cast<NodeIndex>(c + shift_after);
    nodes.push_back(std::move(n));
  }
  return BehaviourTree::from_nodes(std::move(nodes), 0);
}

/// Returns false if the node should be removed from its parent.
bool truncate_into(const BehaviourTree& tree, NodeIndex i, std::size_t depth, std::size_t max_depth,
                   TreeSpec& out) {
  const auto& node = tree.node(i);
  out = TreeSpec{node.kind, {}};
  if (node.children.empty()) return true;
  if (depth == max_depth) return false;  // composite losing all children
  for (auto c : node.children) {
    TreeSpec child;
    if (truncate_into(tree, c, depth + 1, max_depth, child)) out.children.push_back(std::move(child));
  }
  return !out.children.empty();
}

}  // namespace

std::pair<BehaviourTree, BehaviourTree> swap_subtrees(const BehaviourTree& a, NodeIndex point_a,
                                                      const BehaviourTree& b, NodeIndex point_b) {
  return {graft(a, point_a, b, point_b), graft(b, point_b, a, point_a)};
}

BehaviourTree truncate(const BehaviourTree& tree, std::size_t max_depth) {
  if (tree.depth() <= max_depth) return tree;
  TreeSpec root;
  truncate_into(tree, BehaviourTree::root(), 0, max_depth, root);
  return BehaviourTree::from_spec(root);
}

CrossoverResult crossover(const BehaviourTree& a, const BehaviourTree& b, const EAParams& params, Rng& rng) {
  const auto pa = static_cast<NodeIndex>(std::uniform_int_distribution<std::size_t>(0, a.size() - 1)(rng));
  const auto pb = static_cast<NodeIndex>(std::uniform_int_distribution<std::size_t>(0, b.size() - 1)(rng));
  auto [ca, cb] = swap_subtrees(a, pa, b, pb);
  return {truncate(ca, params.max_depth), truncate(cb, params.max_depth), pa, pb};
}

namespace {

TreeSpec mutate_node(const BehaviourTree& tree, NodeIndex i, std::size_t depth, const EAParams& params,
                     Rng& rng, MutationStats& stats) {
  ++stats.visited;
  const auto& node = tree.node(i);
  std::bernoulli_distribution mutates(params.mutation_rate);
  if (mutates(rng)) {
    if (std::bernoulli_distribution(params.hcc_rate)(rng)) {
      ++stats.macro;
      if (depth == 0) return grow(params, rng).to_spec();
      return grow_node(depth, params, rng);
    }
    ++stats.micro;
    if (std::holds_alternative<bt::Condition>(node.kind)) return {random_condition(rng), {}};
    if (std::holds_alternative<bt::Action>(node.kind)) return {random_action(rng), {}};
  }
  TreeSpec out{node.kind, {}};
  out.children.reserve(node.children.size());
  for (auto c : node.children) out.children.push_back(mutate_node(tree, c, depth + 1, params, rng, stats));
  return out;
}

}  // namespace

BehaviourTree mutate(const BehaviourTree& tree, const EAParams& params, Rng& rng, MutationStats* stats) {
  MutationStats local;
  auto spec = mutate_node(tree, BehaviourTree::root(), 0, params, rng, local);
  if (stats) {
    stats->visited += local.visited;
    stats->micro += local.micro;
    stats->macro += local.macro;
  }
  return BehaviourTree::from_spec(spec);
}

}  // namespace btevo::evo
