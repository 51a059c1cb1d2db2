#pragma once

#include <optional>
#include <vector>

#include "btevo/bt/blackboard.hpp"
#include "btevo/bt/tree.hpp"

namespace btevo::bt {

enum class TickStatus { Success, Failure };

struct TickResult {
  TickStatus status = TickStatus::Failure;
  Blackboard blackboard;
  /// Action node that wrote r last during this tick, if any.
  std::optional<NodeIndex> last_action;
  /// Number of nodes evaluated.
  std::size_t evaluated = 0;
};

struct TraceEntry {
  NodeIndex node;
  TickStatus status;
  friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

/// One depth-first, left-to-right evaluation from the root.
TickResult tick(const BehaviourTree& tree, Blackboard bb);

/// As tick(), also recording every evaluated node in visiting order
/// (parents before their children) with the status it returned.
TickResult tick_traced(const BehaviourTree& tree, Blackboard bb, std::vector<TraceEntry>& trace);

const char* to_string(TickStatus s) noexcept;

}  // namespace btevo::bt
