#pragma once

#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>

#include "sssp/graph.hpp"

namespace sssp {

// Text graph format (0-indexed variant of the DIMACS shortest-path layout):
//
//   c <free-form comment>          -- zero or more, anywhere
//   p sp <n> <m>                   -- exactly one header line
//   a <u> <v> <w>                  -- exactly m arc lines, 0 <= u,v <= n-1
//
// Fields are separated by single spaces; every line is newline-terminated.

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Parses a graph from `in`. Throws ParseError (naming the offending line) on
// malformed input.
Graph read_graph(std::istream& in);

// Writes `g` in the text format, preceded by one `c` line per entry of
// `comments`. Reading the result back reproduces `g` exactly.
void write_graph(std::ostream& out, const Graph& g,
                 std::span<const std::string> comments = {});

}  // namespace sssp
