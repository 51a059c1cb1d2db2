#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "btevo/bt/tree.hpp"

namespace btevo::bt {

/// S-expression text form:
///
///   node := "(" "sel" node* ")" | "(" "seq" node* ")"
///         | "(" "cond" VAR CMP NUM ")" | "(" "act" "r" NUM ")"
///   VAR  := x | sigma | Sigma | Delta      CMP := > | <
///
/// `;` starts a comment running to end of line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

struct ParseLimits {
  std::size_t max_depth = 6;
  std::size_t max_children = 6;
};

struct ParseResult {
  BehaviourTree tree;
  /// Depth and child-count excesses. Hand-edited trees may legitimately
  /// exceed the evolution bounds, so these are not errors.
  std::vector<std::string> warnings;
};

ParseResult parse(std::string_view text, ParseLimits limits = {});

/// Canonical multi-line form: one node per line, two-space indent,
/// shortest round-trip number formatting.
std::string serialize(const BehaviourTree& tree);

/// Canonical single-line form.
std::string serialize_compact(const BehaviourTree& tree);

}  // namespace btevo::bt
