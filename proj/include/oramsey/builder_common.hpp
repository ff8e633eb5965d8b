#pragma once

#include <initializer_list>
#include <vector>

#include "oramsey/engine.hpp"

namespace oramsey {

/// Tracked all-green path on the board, owned by a Builder strategy across
/// rounds. Endpoint classes are always recomputed from the board.
struct PathHandle {
  std::vector<VertexId> v;

  int size() const { return static_cast<int>(v.size()); }
  VertexId front() const { return v.front(); }
  VertexId back() const { return v.back(); }
};

inline PathHandle reversed(const PathHandle& p) {
  return PathHandle{{p.v.rbegin(), p.v.rend()}};
}

/// Concatenation of vertex pieces into one handle.
PathHandle cat(std::initializer_list<std::vector<VertexId>> pieces);

inline std::vector<VertexId> seq(std::initializer_list<VertexId> ids) { return ids; }

PathClass path_class(const ColoredGraph& g, const PathHandle& p);

/// Re-validates a handle against the board: consecutive green edges, no
/// repeated vertices, and at least `promised` as its class. A failure is an
/// internal strategy bug and surfaces as StrategyFault.
void validate_path(const ColoredGraph& g, const PathHandle& p,
                   PathClass promised = PathClass::Bad);

/// Orients p so that the named endpoint class sits at the front/back.
PathHandle orient_good_front(const ColoredGraph& g, PathHandle p);
PathHandle orient_good_back(const ColoredGraph& g, PathHandle p);
/// For better paths: better endpoint in front, good endpoint at the back.
PathHandle orient_better_front(const ColoredGraph& g, PathHandle p);

/// One red/blue color incident to v (the red one first when both).
EdgeColor incident_rb_color(const ColoredGraph& g, VertexId v);

/// Round accounting for lemma budgets: require() throws StrategyFault when
/// an operation used more rounds than its stated bound.
class RoundGuard {
 public:
  explicit RoundGuard(const MoveSession& s) : s_(s), start_(s.round()) {}
  int used() const { return s_.round() - start_; }
  void require(int budget, const char* what) const {
    if (used() > budget) throw StrategyFault(std::string(what) + ": round budget exceeded");
  }

 private:
  const MoveSession& s_;
  int start_;
};

}  // namespace oramsey
