#include "oramsey/solver.hpp"

#include <algorithm>
#include <chrono>
#include <set>

namespace oramsey {

namespace {

bool position_won(const ColoredGraph& g, const TargetSpec& t) {
  if (find_mono_p3(g, EdgeColor::Red) || find_mono_p3(g, EdgeColor::Blue)) return true;
  if (t.family == TargetSpec::Family::Path) return green_path_exists(g, t.length);
  return green_cycle_exists(g, t.length);
}

}  // namespace

std::vector<Edge> raw_candidate_moves(const ColoredGraph& g, int vertex_cap) {
  std::vector<Edge> out;
  int n = g.vertex_count();
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) out.push_back(Edge(u, v));
  if (n + 1 <= vertex_cap)
    for (VertexId u = 0; u < n; ++u) out.push_back(Edge(u, n));
  if (n + 2 <= vertex_cap) out.push_back(Edge(n, n + 1));
  return out;
}

std::vector<MoveClass> generate_moves(const ColoredGraph& g, const SearchConfig& cfg) {
  std::vector<MoveClass> classes;
  std::set<std::array<CanonicalKey, 3>> seen;
  for (Edge e : raw_candidate_moves(g, cfg.vertex_cap)) {
    MoveClass mc;
    mc.edge = e;
    for (int c = 0; c < 3; ++c) {
      ColoredGraph child = g;
      child.add_edge(e.u, e.v, static_cast<EdgeColor>(c));
      mc.child_keys[c] = canonical_key(child);
    }
    if (cfg.use_iso_dedup && !seen.insert(mc.child_keys).second) continue;
    classes.push_back(std::move(mc));
  }
  return classes;
}

bool ExactSolver::builder_wins_within(const ColoredGraph& g, int depth) {
  return search(g, canonical_key(g), depth);
}

bool ExactSolver::search(const ColoredGraph& g, const CanonicalKey& key, int depth) {
  ++nodes_;
  if (position_won(g, target_)) return true;
  if (depth <= 0) return false;

  Fact* fact = nullptr;
  if (cfg_.use_memo) {
    fact = &memo_[key];
    if (depth >= fact->min_win_depth) return true;
    if (depth <= fact->max_lose_depth) return false;
  }

  bool win = false;
  for (const MoveClass& mc : generate_moves(g, cfg_)) {
    bool all_colors_win = true;
    for (int c = 0; c < 3 && all_colors_win; ++c) {
      ColoredGraph child = g;
      child.add_edge(mc.edge.u, mc.edge.v, static_cast<EdgeColor>(c));
      if (!search(child, mc.child_keys[c], depth - 1)) all_colors_win = false;
    }
    if (all_colors_win) {
      win = true;
      break;
    }
  }

  if (cfg_.use_memo && memo_.size() <= cfg_.memo_limit) {
    // The map may have rehashed during recursion; refetch.
    Fact& f = memo_[key];
    if (win)
      f.min_win_depth = std::min(f.min_win_depth, depth);
    else
      f.max_lose_depth = std::max(f.max_lose_depth, depth);
  }
  return win;
}

SolveReport online_ramsey_value(TargetSpec target, SearchConfig cfg) {
  auto start = std::chrono::steady_clock::now();
  ExactSolver solver(target, cfg);
  SolveReport rep;
  rep.depth_cap = cfg.depth_cap;
  rep.vertex_cap = cfg.vertex_cap;
  ColoredGraph empty;
  for (int d = 1; d <= cfg.depth_cap; ++d) {
    if (solver.builder_wins_within(empty, d)) {
      rep.value = d;
      break;
    }
  }
  rep.nodes = solver.nodes();
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace oramsey
