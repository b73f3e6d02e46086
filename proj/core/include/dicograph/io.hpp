#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "dicograph/digraph.hpp"

namespace dicograph {

/// Raised for malformed edge-list or expression input. `line` is 1-based for
/// edge lists; `position` is a 0-based character offset for expressions.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line, int position)
      : std::runtime_error(what), line_(line), position_(position) {}
  int line() const { return line_; }
  int position() const { return position_; }

 private:
  int line_;
  int position_;
};

// Edge-list format:
//   n <count>
//   u v        one arc per line, 0-based
// '#' starts a comment. Loops and duplicate arcs are rejected.
Digraph parse_edge_list(std::string_view text);
Digraph read_edge_list(std::istream& in);
std::string to_edge_list(const Digraph& g);

std::string to_dot(const Digraph& g, std::string_view name = "G");

}  // namespace dicograph
