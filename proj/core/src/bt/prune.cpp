#include "btevo/bt/prune.hpp"

namespace btevo::bt {
namespace {

struct StaticInfo {
  bool always_success = false;
  bool always_failure = false;
  bool writes_rudder = false;
};

bool never_holds(const Condition& c) noexcept {
  const auto r = range_of(c.variable);
  return c.comparison == Comparison::GreaterThan ? c.threshold >= r.hi : c.threshold <= r.lo;
}

StaticInfo analyse(const TreeSpec& t) {
  if (const auto* c = std::get_if<Condition>(&t.kind)) return {false, never_holds(*c), false};
  if (std::holds_alternative<Action>(t.kind)) return {true, false, true};
  const bool selector = std::holds_alternative<Selector>(t.kind);
  StaticInfo info{!selector, selector, false};
  for (const auto& c : t.children) {
    const auto ci = analyse(c);
    info.writes_rudder = info.writes_rudder || ci.writes_rudder;
    if (selector) {
      info.always_success = info.always_success || ci.always_success;
      info.always_failure = info.always_failure && ci.always_failure;
    } else {
      info.always_success = info.always_success && ci.always_success;
      info.always_failure = info.always_failure || ci.always_failure;
    }
  }
  return info;
}

TreeSpec simplify(const TreeSpec& t) {
  if (!is_composite(t.kind)) return t;
  const bool selector = std::holds_alternative<Selector>(t.kind);

  std::vector<TreeSpec> flat;
  for (const auto& raw : t.children) {
    auto c = simplify(raw);
    if (c.kind.index() == t.kind.index()) {
      for (auto& g : c.children) flat.push_back(std::move(g));
    } else {
      flat.push_back(std::move(c));
    }
  }

  std::vector<TreeSpec> kept;
  for (auto& c : flat) {
    const auto info = analyse(c);
    // A child whose status is the parent's "keep going" value and which has
    // no side effect cannot change anything.
    const bool neutral = selector ? info.always_failure : info.always_success;
    if (neutral && !info.writes_rudder) continue;
    if (!selector && std::holds_alternative<Action>(c.kind) && !kept.empty() &&
        std::holds_alternative<Action>(kept.back().kind)) {
      kept.back() = std::move(c);
      continue;
    }
    const bool stops = selector ? info.always_success : info.always_failure;
    kept.push_back(std::move(c));
    if (stops) break;
  }

  if (kept.size() == 1) return std::move(kept.front());
  return TreeSpec{t.kind, std::move(kept)};
}

}  // namespace

BehaviourTree prune(const BehaviourTree& tree) {
  auto spec = tree.to_spec();
  for (;;) {
    auto next = simplify(spec);
    if (next == spec) break;
    spec = std::move(next);
  }
  return BehaviourTree::from_spec(spec);
}

}  // namespace btevo::bt
