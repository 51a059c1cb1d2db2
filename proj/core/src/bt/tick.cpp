#include "btevo/bt/tick.hpp"

namespace btevo::bt {
namespace {

bool holds(const Condition& c, const Blackboard& bb) noexcept {
  const double v = bb.get(c.variable);
  return c.comparison == Comparison::GreaterThan ? v > c.threshold : v < c.threshold;
}

template <bool Traced>
class Evaluator {
 public:
  Evaluator(const BehaviourTree& tree, TickResult& result, std::vector<TraceEntry>* trace)
      : nodes_(tree.nodes()), result_(result), trace_(trace) {}

  TickStatus eval(NodeIndex i) {
    ++result_.evaluated;
    std::size_t slot = 0;
    if constexpr (Traced) {
      slot = trace_->size();
      trace_->push_back({i, TickStatus::Failure});
    }
    const Node& node = nodes_[i];
    TickStatus status = TickStatus::Failure;
    if (std::holds_alternative<Selector>(node.kind)) {
      status = TickStatus::Failure;
      for (auto c : node.children)
        if (eval(c) == TickStatus::Success) {
          status = TickStatus::Success;
          break;
        }
    } else if (std::holds_alternative<Sequence>(node.kind)) {
      status = TickStatus::Success;
      for (auto c : node.children)
        if (eval(c) == TickStatus::Failure) {
          status = TickStatus::Failure;
          break;
        }
    } else if (const auto* c = std::get_if<Condition>(&node.kind)) {
      status = holds(*c, result_.blackboard) ? TickStatus::Success : TickStatus::Failure;
    } else {
      result_.blackboard.r = std::get<Action>(node.kind).rudder;
      result_.last_action = i;
      status = TickStatus::Success;
    }
    if constexpr (Traced) (*trace_)[slot].status = status;
    return status;
  }

 private:
  const std::vector<Node>& nodes_;
  TickResult& result_;
  std::vector<TraceEntry>* trace_;
};

}  // namespace

TickResult tick(const BehaviourTree& tree, Blackboard bb) {
  TickResult result;
  result.blackboard = bb;
  result.status = Evaluator<false>(tree, result, nullptr).eval(BehaviourTree::root());
  return result;
}

TickResult tick_traced(const BehaviourTree& tree, Blackboard bb, std::vector<TraceEntry>& trace) {
  TickResult result;
  result.blackboard = bb;
  trace.clear();
  result.status = Evaluator<true>(tree, result, &trace).eval(BehaviourTree::root());
  return result;
}

const char* to_string(TickStatus s) noexcept {
  return s == TickStatus::Success ? "Success" : "Failure";
}

}  // namespace btevo::bt
