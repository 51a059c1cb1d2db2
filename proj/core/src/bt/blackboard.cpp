#include "btevo/bt/blackboard.hpp"

namespace btevo::bt {

std::string_view name_of(Variable v) noexcept {
  switch (v) {
    case Variable::WindowX: return "x";
    case Variable::WindowResponse: return "sigma";
    case Variable::DisparitySum: return "Sigma";
    case Variable::DisparityDifference: return "Delta";
  }
  return "?";
}

std::optional<Variable> variable_from_name(std::string_view name) noexcept {
  for (auto v : kAllVariables)
    if (name_of(v) == name) return v;
  return std::nullopt;
}

bool Blackboard::in_range() const noexcept {
  for (auto v : kAllVariables)
    if (!range_of(v).contains(get(v))) return false;
  return kRudderRange.contains(r);
}

}  // namespace btevo::bt
