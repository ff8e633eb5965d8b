#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "oramsey/canonical.hpp"
#include "oramsey/game.hpp"

namespace oramsey {

struct SearchConfig {
  int vertex_cap = 12;       // must stay within the canonicalization cap
  int depth_cap = 10;        // iterative-deepening limit
  size_t memo_limit = 1u << 22;  // max memo entries
  bool use_memo = true;      // toggles exist for the soundness checks
  bool use_iso_dedup = true;
};

/// Every legal next edge before isomorphism reduction: all non-edges among
/// used vertices, one edge from each used vertex to a single fresh vertex,
/// and one fresh-fresh edge. Fresh allocations that would exceed the vertex
/// cap are omitted.
std::vector<Edge> raw_candidate_moves(const ColoredGraph& g, int vertex_cap);

/// A candidate move with the canonical keys of the three colored children;
/// equal key triples give minimax-equal subtrees.
struct MoveClass {
  Edge edge;
  std::array<CanonicalKey, 3> child_keys;  // indexed by EdgeColor
};

/// Iso-deduplicated move classes (one representative per key triple, the
/// lexicographically least edge), or all raw moves when dedup is disabled.
std::vector<MoveClass> generate_moves(const ColoredGraph& g, const SearchConfig& cfg);

/// Exact minimax solver for r~(P3,P3,target) over boards within the caps,
/// memoized on canonical keys with the monotone win/lose compression
/// (builder wins within d implies within every d' > d).
class ExactSolver {
 public:
  ExactSolver(TargetSpec target, SearchConfig cfg) : target_(target), cfg_(cfg) {}

  /// True iff Builder can force a win within `depth` further rounds from
  /// `g`, with Painter ranging over all three colors each round.
  bool builder_wins_within(const ColoredGraph& g, int depth);

  long long nodes() const { return nodes_; }
  size_t memo_entries() const { return memo_.size(); }

 private:
  struct Fact {
    int min_win_depth = 1 << 20;
    int max_lose_depth = -1;
  };
  bool search(const ColoredGraph& g, const CanonicalKey& key, int depth);

  TargetSpec target_;
  SearchConfig cfg_;
  std::unordered_map<CanonicalKey, Fact> memo_;
  long long nodes_ = 0;
};

struct SolveReport {
  std::optional<int> value;  // empty: inconclusive, lower bound > depth_cap
  int depth_cap = 0;
  int vertex_cap = 0;
  long long nodes = 0;
  double seconds = 0.0;
};

/// Smallest d with builder_wins_within(empty, d), by iterative deepening
/// from d = 1. Values are exact whenever vertex_cap >= 2*d (a d-round game
/// touches at most 2d vertices); the report carries the caps used.
SolveReport online_ramsey_value(TargetSpec target, SearchConfig cfg);

}  // namespace oramsey
