#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "oramsey/types.hpp"

namespace oramsey {

enum class VertexClass : uint8_t { Plain = 0, Good = 1, Better = 2 };
enum class PathClass : uint8_t { Bad = 0, Good = 1, Better = 2, Best = 3 };

/// Growable simple graph whose edges carry one of three colors; the shared
/// board of the Builder-Painter game. Value type: copying is cheap at game
/// sizes and games never share a mutable board.
class ColoredGraph {
 public:
  ColoredGraph() = default;

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  int edge_count() const { return edge_count_; }

  /// Grows the vertex set so that `v` is a valid id.
  void ensure_vertex(VertexId v) {
    if (v >= vertex_count()) adj_.resize(static_cast<size_t>(v) + 1);
  }

  /// Allocates one fresh vertex and returns its id.
  VertexId add_vertex() {
    adj_.emplace_back();
    return vertex_count() - 1;
  }

  /// Adds edge {u,v} with color c, growing the vertex set if needed.
  /// Throws SelfLoopError / DuplicateEdgeError.
  void add_edge(VertexId u, VertexId v, EdgeColor c) {
    if (u == v) throw SelfLoopError{};
    ensure_vertex(u);
    ensure_vertex(v);
    if (edge_color(u, v)) throw DuplicateEdgeError{};
    adj_[u].push_back({v, c});
    adj_[v].push_back({u, c});
    ++edge_count_;
  }

  bool has_edge(VertexId u, VertexId v) const { return edge_color(u, v).has_value(); }

  std::optional<EdgeColor> edge_color(VertexId u, VertexId v) const {
    if (u < 0 || u >= vertex_count() || v < 0 || v >= vertex_count()) return std::nullopt;
    for (const auto& [w, c] : adj_[u])
      if (w == v) return c;
    return std::nullopt;
  }

  /// Neighbors of v with edge colors, in insertion order.
  const std::vector<std::pair<VertexId, EdgeColor>>& neighbors(VertexId v) const {
    return adj_[v];
  }

  int degree(VertexId v) const { return static_cast<int>(adj_[v].size()); }

  int color_degree(VertexId v, EdgeColor c) const {
    int n = 0;
    for (const auto& [w, cc] : adj_[v])
      if (cc == c) ++n;
    return n;
  }

  /// All edges as (Edge, color), sorted by endpoint pair.
  std::vector<std::pair<Edge, EdgeColor>> edges() const;

  bool operator==(const ColoredGraph& o) const;

 private:
  std::vector<std::vector<std::pair<VertexId, EdgeColor>>> adj_;
  int edge_count_ = 0;
};

/// Lexicographically least triple (a,b,c) with edges {a,b},{b,c} both of
/// color `c` (a < c within the triple; the path equals its reverse).
std::optional<std::array<VertexId, 3>> find_mono_p3(const ColoredGraph& g, EdgeColor c);

/// Exact longest simple path in the green subgraph (exhaustive DFS).
/// Returns the empty sequence when no green edge exists; ties broken
/// lexicographically over the smaller of each path's two orientations.
std::vector<VertexId> longest_green_path(const ColoredGraph& g);

/// True iff some simple all-green path on at least `len` vertices exists.
/// Early-exit variant used by win detection.
bool green_path_exists(const ColoredGraph& g, int len);

/// Some green path with at least `len` vertices, truncated to exactly `len`,
/// or empty. Deterministic.
std::vector<VertexId> green_path_witness(const ColoredGraph& g, int len);

/// True iff a simple all-green cycle on exactly `len` vertices exists.
/// Throws InvalidLengthError for len < 3.
bool green_cycle_exists(const ColoredGraph& g, int len);

/// The cycle itself (len vertices, closing edge implied), or empty.
std::vector<VertexId> green_cycle_witness(const ColoredGraph& g, int len);

/// Better iff incident to >=1 red and >=1 blue edge; Good iff incident to
/// >=1 non-green edge; Plain otherwise.
VertexClass classify_vertex(const ColoredGraph& g, VertexId v);

/// Classifies a green path by its endpoint classes. Throws NotAGreenPathError
/// if some consecutive pair is not joined by a green edge.
PathClass classify_green_path(const ColoredGraph& g, const std::vector<VertexId>& path);

}  // namespace oramsey
