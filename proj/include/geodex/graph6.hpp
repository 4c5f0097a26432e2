#ifndef GEODEX_GRAPH6_HPP
#define GEODEX_GRAPH6_HPP

#include <stdexcept>
#include <string>

#include "geodex/graph.hpp"

namespace geodex {

struct Graph6Error : std::runtime_error {
  enum class Kind { BadHeader, Truncated, TrailingGarbage, BadByte };
  Kind kind;
  Graph6Error(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

// one graph6 record; tolerates a ">>graph6<<" prefix and trailing
// newline/whitespace. Supports the small (n <= 62) and medium (n <= 258047)
// header forms; the long form is rejected.
Graph parse_graph6(const std::string& line);
std::string encode_graph6(const Graph& g);

struct MatrixParseError : std::runtime_error {
  int row, col;  // 0-based; -1 when not applicable
  MatrixParseError(const std::string& msg, int r, int c) : std::runtime_error(msg), row(r), col(c) {}
};

// n lines of n entries in {0,1}, whitespace tolerated between entries;
// must be symmetric with a zero diagonal
Graph parse_adjacency_matrix(const std::string& text);

}  // namespace geodex

#endif
