#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace oramsey {

/// Dense vertex index. The board is "infinite": fresh ids are handed out on
/// demand and never reused within one game.
using VertexId = int;

enum class EdgeColor : uint8_t { Red = 0, Blue = 1, Green = 2 };

inline char color_letter(EdgeColor c) {
  switch (c) {
    case EdgeColor::Red: return 'R';
    case EdgeColor::Blue: return 'B';
    case EdgeColor::Green: return 'G';
  }
  return '?';
}

/// The red/blue color other than `c`. Only meaningful for non-green colors.
inline EdgeColor opposite_rb(EdgeColor c) {
  return c == EdgeColor::Red ? EdgeColor::Blue : EdgeColor::Red;
}

/// Unordered vertex pair, normalized so that u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  Edge() = default;
  Edge(VertexId a, VertexId b) : u(a < b ? a : b), v(a < b ? b : a) {}
  bool operator==(const Edge&) const = default;
  auto operator<=>(const Edge&) const = default;
};

struct GraphError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SelfLoopError : GraphError {
  SelfLoopError() : GraphError("self-loop") {}
};
struct DuplicateEdgeError : GraphError {
  DuplicateEdgeError() : GraphError("duplicate edge") {}
};
struct InvalidLengthError : GraphError {
  InvalidLengthError() : GraphError("cycle length must be >= 3") {}
};
struct NotAGreenPathError : GraphError {
  NotAGreenPathError() : GraphError("vertex sequence is not a green path") {}
};
struct TooLargeError : GraphError {
  TooLargeError() : GraphError("graph exceeds canonicalization cap") {}
};

}  // namespace oramsey
