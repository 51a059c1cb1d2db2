#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace btevo::bt {

/// Condition inputs written by the vision pipeline before each tick.
enum class Variable { WindowX, WindowResponse, DisparitySum, DisparityDifference };

inline constexpr std::array<Variable, 4> kAllVariables = {
    Variable::WindowX, Variable::WindowResponse, Variable::DisparitySum,
    Variable::DisparityDifference};

struct Range {
  double lo;
  double hi;
  constexpr bool contains(double v) const noexcept { return v >= lo && v <= hi; }
};

/// Declared value ranges. Condition thresholds are drawn from these during
/// evolution and checked against them when parsing.
constexpr Range range_of(Variable v) noexcept {
  switch (v) {
    case Variable::WindowX: return {-1.0, 1.0};
    case Variable::WindowResponse: return {0.0, 100.0};
    case Variable::DisparitySum: return {0.0, 1.0};
    case Variable::DisparityDifference: return {-1.0, 1.0};
  }
  return {0.0, 0.0};
}

inline constexpr Range kRudderRange{-1.0, 1.0};

/// DSL spelling: x, sigma, Sigma, Delta.
std::string_view name_of(Variable v) noexcept;
std::optional<Variable> variable_from_name(std::string_view name) noexcept;

/// Shared state between sensing and the tree. x, sigma, Sigma and Delta are
/// inputs; r is the rudder command written by Action nodes.
struct Blackboard {
  double x = 0.0;
  double sigma = 100.0;
  double Sigma = 0.0;
  double Delta = 0.0;
  double r = 0.0;

  double get(Variable v) const noexcept {
    switch (v) {
      case Variable::WindowX: return x;
      case Variable::WindowResponse: return sigma;
      case Variable::DisparitySum: return Sigma;
      case Variable::DisparityDifference: return Delta;
    }
    return 0.0;
  }
  void set(Variable v, double value) noexcept {
    switch (v) {
      case Variable::WindowX: x = value; break;
      case Variable::WindowResponse: sigma = value; break;
      case Variable::DisparitySum: Sigma = value; break;
      case Variable::DisparityDifference: Delta = value; break;
    }
  }

  /// True when every field lies in its declared range.
  bool in_range() const noexcept;

  friend bool operator==(const Blackboard&, const Blackboard&) = default;
};

}  // namespace btevo::bt
