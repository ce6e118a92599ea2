#pragma once

#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "effdom/graph.hpp"

namespace effdom {

// Raised for malformed graph or CNF text. what() names the 1-based line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Line format:
//   c <comment>
//   p ed <n> <m>        exactly once, before any w/e line
//   w <v> <weight>      optional, default weight 1
//   e <u> <v>           m of these; 1 <= u, v <= n, u != v
WeightedGraph parse_graph(std::istream& in);
WeightedGraph parse_graph(std::string_view text);

// Canonical rendering: header, non-unit weights, edges in (u, v) order.
std::string render_graph(const WeightedGraph& g);

}  // namespace effdom
