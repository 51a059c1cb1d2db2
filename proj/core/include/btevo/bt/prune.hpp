#pragma once

#include "btevo/bt/tree.hpp"

namespace btevo::bt {

/// Removes nodes that cannot influence the tick status or the final rudder
/// command. Rules, applied bottom-up until nothing changes:
///  - children after one that always succeeds (Selector) or always fails
///    (Sequence) are unreachable;
///  - side-effect-free children whose status is constant and neutral for the
///    parent are dropped (failing children of a Selector, succeeding
///    children of a Sequence);
///  - an Action directly followed by another Action in a Sequence is
///    overwritten and dropped;
///  - a composite nested in a composite of the same type is spliced in;
///  - single-child composites are replaced by the child.
/// Conditions that can never hold over their variable's range count as
/// always failing.
BehaviourTree prune(const BehaviourTree& tree);

}  // namespace btevo::bt
