#include "oramsey/painters.hpp"

#include <deque>

namespace oramsey {

namespace {

bool touches_color(const ColoredGraph& g, Edge e, EdgeColor c) {
  return g.color_degree(e.u, c) > 0 || g.color_degree(e.v, c) > 0;
}

bool edges_adjacent(Edge a, Edge b) {
  return a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
}

// Shortest path between u and v inside the red/blue subgraph H, or -1.
int h_distance(const ColoredGraph& g, VertexId u, VertexId v) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::deque<VertexId> q{u};
  dist[u] = 0;
  while (!q.empty()) {
    VertexId x = q.front();
    q.pop_front();
    if (x == v) return dist[x];
    for (const auto& [w, c] : g.neighbors(x)) {
      if (c == EdgeColor::Green || dist[w] >= 0) continue;
      dist[w] = dist[x] + 1;
      q.push_back(w);
    }
  }
  return -1;
}

}  // namespace

EdgeColor priority_color(const GameState& state, Edge e) {
  if (!touches_color(state.graph, e, EdgeColor::Red)) return EdgeColor::Red;
  if (!touches_color(state.graph, e, EdgeColor::Blue)) return EdgeColor::Blue;
  return EdgeColor::Green;
}

EdgeColor cycle_avoiding_color(const GameState& state, Edge e, int len) {
  if (len % 4 != 1) throw InvalidResidueError{};
  int d = h_distance(state.graph, e.u, e.v);
  if (d >= 0 && d + 1 <= (len - 1) / 2) return EdgeColor::Green;
  return priority_color(state, e);
}

EdgeColor small_case_color(const GameState& state, Edge e, int len) {
  const auto& log = state.log;
  int r = state.round;  // edges already on the board
  switch (len) {
    case 2:
      if (r == 0) return EdgeColor::Red;
      if (r == 1) return EdgeColor::Blue;
      throw StrategyFault("painter out of script");
    case 3:
      if (r == 0) return EdgeColor::Red;
      if (r == 1) return EdgeColor::Blue;
      if (r == 2) return EdgeColor::Green;
      throw StrategyFault("painter out of script");
    case 4: {
      if (r == 0) return EdgeColor::Red;
      Edge first = log[0].edge;
      if (r == 1) return edges_adjacent(e, first) ? EdgeColor::Blue : EdgeColor::Red;
      if (r >= 5) throw StrategyFault("painter out of script");
      Edge second = log[1].edge;
      if (!edges_adjacent(second, first)) {
        // Both opening edges red: one blue then greens.
        bool blue_used = false;
        for (const auto& m : log)
          if (m.color == EdgeColor::Blue) blue_used = true;
        return blue_used ? EdgeColor::Green : EdgeColor::Blue;
      }
      // first = v1v2 (red), second = v2v3 (blue).
      int reds = 0, blues = 0;
      for (const auto& m : log) {
        if (m.color == EdgeColor::Red) ++reds;
        if (m.color == EdgeColor::Blue) ++blues;
      }
      if (reds < 2 && !edges_adjacent(e, first)) return EdgeColor::Red;
      if (blues < 2 && edges_adjacent(e, first) && !edges_adjacent(e, second))
        return EdgeColor::Blue;
      return EdgeColor::Green;
    }
    default:
      throw StrategyFault("small-case painter needs len in {2,3,4}");
  }
}

PainterAudit audit(const GameState& state) {
  const ColoredGraph& g = state.graph;
  PainterAudit a;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    int red = g.color_degree(v, EdgeColor::Red);
    int blue = g.color_degree(v, EdgeColor::Blue);
    if (red > 1) throw AuditViolation("red edges do not form a matching");
    if (blue > 1) throw AuditViolation("blue edges do not form a matching");
    int h = red + blue;
    if (h > 2) throw AuditViolation("Delta(H) > 2");
    if (h == 2)
      a.x.insert(v);
    else if (h == 1 && red == 1)
      a.y.insert(v);
    else if (h == 1)
      a.z.insert(v);
  }
  if ((a.y.size() + a.z.size()) % 2 != 0) throw AuditViolation("|Y|+|Z| is odd");
  if ((a.x.size() + a.y.size()) % 2 != 0) throw AuditViolation("|X|+|Y| is odd");
  return a;
}

PaperPainter::PaperPainter(TargetSpec target) {
  param_ = target.family == TargetSpec::Family::Path ? target.length : target.length + 1;
}

EdgeColor PaperPainter::color(const GameState& state, Edge e) {
  if (param_ <= 4) return small_case_color(state, e, param_);
  if (param_ % 4 == 1) return cycle_avoiding_color(state, e, param_);
  return priority_color(state, e);
}

EdgeColor NonLosingRandomPainter::color(const GameState& state, Edge e) {
  EdgeColor all[3] = {EdgeColor::Red, EdgeColor::Blue, EdgeColor::Green};
  EdgeColor safe[3];
  int n = 0;
  for (EdgeColor c : all) {
    bool loses = c != EdgeColor::Green && touches_color(state.graph, e, c);
    if (!loses) safe[n++] = c;
  }
  if (n == 0) return all[rng_() % 3];
  return safe[rng_() % n];
}

}  // namespace oramsey
