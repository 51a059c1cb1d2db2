#pragma once

#include <cstddef>
#include <span>
#include <utility>

#include "btevo/bt/tree.hpp"
#include "btevo/common/rng.hpp"
#include "btevo/evo/params.hpp"

namespace btevo::evo {

enum class NodeClass { Composite, Action, Condition };

/// Uniform over the three classes, or over the two leaf classes at the
/// depth limit.
NodeClass draw_node_class(bool at_depth_limit, Rng& rng);

bt::Condition random_condition(Rng& rng);
bt::Action random_action(Rng& rng);

/// Random node at `depth`; composites are filled with max_children
/// children, recursively, never exceeding max_depth.
bt::TreeSpec grow_node(std::size_t depth, const EAParams& params, Rng& rng);

/// Selector root filled with max_children grown children.
bt::BehaviourTree grow(const EAParams& params, Rng& rng);

/// What tournament selection looks at.
struct Candidate {
  double fitness = 0.0;
  std::size_t size = 0;
};

/// Index into `subgroup` of the winner: rank by fitness (higher first) then
/// size (smaller first); the second-ranked wins if strictly smaller than the
/// first.
std::size_t pick_from_subgroup(std::span<const Candidate> subgroup);

/// Draws tournament_size() members without replacement and returns the
/// population index of the winner.
std::size_t tournament_select(std::span<const Candidate> population, const EAParams& params, Rng& rng);

/// Exchanges the subtree at point_a in a with the subtree at point_b in b.
std::pair<bt::BehaviourTree, bt::BehaviourTree> swap_subtrees(const bt::BehaviourTree& a,
                                                              bt::NodeIndex point_a,
                                                              const bt::BehaviourTree& b,
                                                              bt::NodeIndex point_b);

/// Deletes nodes deeper than max_depth, then composites emptied by that
/// deletion, recursively. The root is kept.
bt::BehaviourTree truncate(const bt::BehaviourTree& tree, std::size_t max_depth);

struct CrossoverResult {
  bt::BehaviourTree child_a;
  bt::BehaviourTree child_b;
  bt::NodeIndex point_a = 0;
  bt::NodeIndex point_b = 0;
};

/// Uniform crossover point in each parent, subtree swap, depth truncation.
CrossoverResult crossover(const bt::BehaviourTree& a, const bt::BehaviourTree& b,
                          const EAParams& params, Rng& rng);

struct MutationStats {
  std::size_t visited = 0;
  std::size_t micro = 0;
  std::size_t macro = 0;
};

/// Each node mutates with probability mutation_rate; a mutating node is
/// replaced by a freshly grown subtree with probability hcc_rate (macro),
/// otherwise a leaf re-draws its parameters (micro) and a composite is left
/// alone. Nodes inside a replaced subtree are not visited.
bt::BehaviourTree mutate(const bt::BehaviourTree& tree, const EAParams& params, Rng& rng,
                         MutationStats* stats = nullptr);

}  // namespace btevo::evo
