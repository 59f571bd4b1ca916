#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bootperc/graph.hpp"

namespace bootperc::cli {

/// Parse failure in a graph expression; `position` is a 0-based column.
class ExpressionError : public std::runtime_error {
 public:
  ExpressionError(std::string message, std::string expression, std::size_t position);

  std::size_t position() const { return position_; }
  const std::string& expression() const { return expression_; }
  /// Message, the expression, and a caret under the offending column.
  std::string render() const;

 private:
  std::string expression_;
  std::size_t position_;
};

/// Grammar:
///   expr    := term ('x' term)*
///   term    := '(' expr ')' | 'file:' PATH | builder INT*
/// Builders: path n, cycle n, complete n, bipartite a b, hypercube d,
/// star n, star+e n, bfamily m, grid n m, wheel n, petersen, triangle-pair,
/// subdivided-k4. The product 'x' is left associative.
Graph parse_expression(std::string_view text);

/// Builder names accepted by parse_expression, with their arities.
const std::vector<std::pair<std::string, std::size_t>>& builder_table();

}  // namespace bootperc::cli
