#include "oramsey/colored_graph.hpp"

#include <algorithm>

namespace oramsey {

std::vector<std::pair<Edge, EdgeColor>> ColoredGraph::edges() const {
  std::vector<std::pair<Edge, EdgeColor>> out;
  out.reserve(edge_count_);
  for (VertexId u = 0; u < vertex_count(); ++u)
    for (const auto& [v, c] : adj_[u])
      if (u < v) out.push_back({Edge(u, v), c});
  std::sort(out.begin(), out.end());
  return out;
}

bool ColoredGraph::operator==(const ColoredGraph& o) const {
  return vertex_count() == o.vertex_count() && edges() == o.edges();
}

std::optional<std::array<VertexId, 3>> find_mono_p3(const ColoredGraph& g, EdgeColor c) {
  std::optional<std::array<VertexId, 3>> best;
  for (VertexId mid = 0; mid < g.vertex_count(); ++mid) {
    if (g.color_degree(mid, c) < 2) continue;
    std::vector<VertexId> nbr;
    for (const auto& [w, cc] : g.neighbors(mid))
      if (cc == c) nbr.push_back(w);
    std::sort(nbr.begin(), nbr.end());
    for (size_t i = 0; i < nbr.size(); ++i)
      for (size_t j = i + 1; j < nbr.size(); ++j) {
        std::array<VertexId, 3> t{nbr[i], mid, nbr[j]};
        if (!best || t < *best) best = t;
      }
  }
  return best;
}

namespace {

// Green-subgraph adjacency, sorted for deterministic traversal order.
std::vector<std::vector<VertexId>> green_adj(const ColoredGraph& g) {
  std::vector<std::vector<VertexId>> adj(g.vertex_count());
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    for (const auto& [v, c] : g.neighbors(u))
      if (c == EdgeColor::Green) adj[u].push_back(v);
    std::sort(adj[u].begin(), adj[u].end());
  }
  return adj;
}

struct PathSearch {
  const std::vector<std::vector<VertexId>>& adj;
  std::vector<char> used;
  std::vector<VertexId> cur;
  std::vector<VertexId> best;
  int stop_len;  // stop as soon as a path of this many vertices is found; 0 = exhaustive

  bool done() const { return stop_len > 0 && static_cast<int>(best.size()) >= stop_len; }

  void consider() {
    if (cur.size() < best.size()) return;
    std::vector<VertexId> rev(cur.rbegin(), cur.rend());
    const std::vector<VertexId>& canon = rev < cur ? rev : cur;
    if (canon.size() > best.size() || canon < best) best = canon;
  }

  void dfs(VertexId v) {
    if (done()) return;
    used[v] = 1;
    cur.push_back(v);
    if (cur.size() >= 2) consider();
    for (VertexId w : adj[v]) {
      if (used[w]) continue;
      dfs(w);
      if (done()) break;
    }
    cur.pop_back();
    used[v] = 0;
  }
};

}  // namespace

std::vector<VertexId> longest_green_path(const ColoredGraph& g) {
  auto adj = green_adj(g);
  PathSearch s{adj, std::vector<char>(g.vertex_count(), 0), {}, {}, 0};
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (!adj[v].empty()) s.dfs(v);
  return s.best;
}

bool green_path_exists(const ColoredGraph& g, int len) {
  if (len <= 1) return g.vertex_count() >= len;
  auto adj = green_adj(g);
  PathSearch s{adj, std::vector<char>(g.vertex_count(), 0), {}, {}, len};
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (adj[v].empty()) continue;
    s.dfs(v);
    if (s.done()) return true;
  }
  return false;
}

std::vector<VertexId> green_path_witness(const ColoredGraph& g, int len) {
  auto adj = green_adj(g);
  PathSearch s{adj, std::vector<char>(g.vertex_count(), 0), {}, {}, len};
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (adj[v].empty()) continue;
    s.dfs(v);
    if (s.done()) {
      s.best.resize(len);
      return s.best;
    }
  }
  return {};
}

namespace {

// DFS for a green cycle of exactly `len` vertices whose minimum vertex is
// `start`; only vertices > start may appear after it, which enumerates each
// cycle once up to rotation.
bool cycle_dfs(const std::vector<std::vector<VertexId>>& adj, VertexId start, VertexId v,
               int len, std::vector<char>& used, std::vector<VertexId>& cur,
               std::vector<VertexId>* witness) {
  if (static_cast<int>(cur.size()) == len) {
    for (VertexId w : adj[v])
      if (w == start) {
        if (witness) *witness = cur;
        return true;
      }
    return false;
  }
  for (VertexId w : adj[v]) {
    if (w <= start || used[w]) continue;
    used[w] = 1;
    cur.push_back(w);
    if (cycle_dfs(adj, start, w, len, used, cur, witness)) return true;
    cur.pop_back();
    used[w] = 0;
  }
  return false;
}

std::vector<VertexId> green_cycle_search(const ColoredGraph& g, int len) {
  if (len < 3) throw InvalidLengthError{};
  auto adj = green_adj(g);
  std::vector<char> used(g.vertex_count(), 0);
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    if (static_cast<int>(adj[s].size()) < 2) continue;
    std::vector<VertexId> cur{s};
    used[s] = 1;
    std::vector<VertexId> witness;
    if (cycle_dfs(adj, s, s, len, used, cur, &witness)) return witness;
    used[s] = 0;
  }
  return {};
}

}  // namespace

bool green_cycle_exists(const ColoredGraph& g, int len) {
  return !green_cycle_search(g, len).empty();
}

std::vector<VertexId> green_cycle_witness(const ColoredGraph& g, int len) {
  return green_cycle_search(g, len);
}

VertexClass classify_vertex(const ColoredGraph& g, VertexId v) {
  bool red = g.color_degree(v, EdgeColor::Red) > 0;
  bool blue = g.color_degree(v, EdgeColor::Blue) > 0;
  if (red && blue) return VertexClass::Better;
  if (red || blue) return VertexClass::Good;
  return VertexClass::Plain;
}

PathClass classify_green_path(const ColoredGraph& g, const std::vector<VertexId>& path) {
  if (path.size() < 2) throw NotAGreenPathError{};
  for (size_t i = 0; i + 1 < path.size(); ++i) {
    auto c = g.edge_color(path[i], path[i + 1]);
    if (!c || *c != EdgeColor::Green) throw NotAGreenPathError{};
  }
  for (size_t i = 0; i < path.size(); ++i)
    for (size_t j = i + 1; j < path.size(); ++j)
      if (path[i] == path[j]) throw NotAGreenPathError{};
  VertexClass a = classify_vertex(g, path.front());
  VertexClass b = classify_vertex(g, path.back());
  if (a == VertexClass::Better && b == VertexClass::Better) return PathClass::Best;
  if ((a == VertexClass::Better && b >= VertexClass::Good) ||
      (b == VertexClass::Better && a >= VertexClass::Good))
    return PathClass::Better;
  if (a >= VertexClass::Good || b >= VertexClass::Good) return PathClass::Good;
  return PathClass::Bad;
}

}  // namespace oramsey
