#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "oramsey/engine.hpp"

namespace oramsey {

struct InvalidResidueError : std::runtime_error {
  InvalidResidueError() : std::runtime_error("cycle-avoiding painter needs len = 1 (mod 4)") {}
};

struct AuditViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Priority coloring: red if the edge is nonadjacent to every red edge, else
/// blue if nonadjacent to every blue edge, else green. Keeps the red edges a
/// matching and the blue edges a matching.
EdgeColor priority_color(const GameState& state, Edge e);

/// Variant for green targets of size len = 1 (mod 4): an edge whose addition
/// to the red/blue subgraph H would close a cycle of length <= (len-1)/2 is
/// colored green; otherwise the priority rule applies. Cycle length is
/// 1 + the shortest H-path between the endpoints (exact since Delta(H) <= 2).
EdgeColor cycle_avoiding_color(const GameState& state, Edge e, int len);

/// The special scripts for len in {2,3,4}: two edges red,blue (len 2); three
/// edges red,blue,green (len 3); the adaptive five-move strategy (len 4).
/// Throws StrategyFault("painter out of script") beyond the horizon.
EdgeColor small_case_color(const GameState& state, Edge e, int len);

/// X: vertices of degree 2 in the red/blue subgraph H; Y / Z: degree-1
/// vertices incident to a red / blue edge.
struct PainterAudit {
  std::set<VertexId> x, y, z;
};

/// Recomputes X/Y/Z and asserts the structural invariants of the paper
/// painters: red edges form a matching, blue edges form a matching,
/// Delta(H) <= 2, and both |Y|+|Z| and |X|+|Y| are even. Throws
/// AuditViolation naming the failed clause.
PainterAudit audit(const GameState& state);

class PriorityPainter : public Painter {
 public:
  EdgeColor color(const GameState& state, Edge e) override {
    return priority_color(state, e);
  }
};

class CycleAvoidingPainter : public Painter {
 public:
  explicit CycleAvoidingPainter(int len) : len_(len) {
    if (len_ % 4 != 1) throw InvalidResidueError{};
  }
  EdgeColor color(const GameState& state, Edge e) override {
    return cycle_avoiding_color(state, e, len_);
  }

 private:
  int len_;
};

class SmallCasePainter : public Painter {
 public:
  explicit SmallCasePainter(int len) : len_(len) {}
  EdgeColor color(const GameState& state, Edge e) override {
    return small_case_color(state, e, len_);
  }

 private:
  int len_;
};

/// The lower-bound strategy matched to a target: the small-case script for
/// parameter <= 4, the cycle-avoiding painter for parameter = 1 (mod 4), the
/// priority painter otherwise. For a Cycle(len) target the parameter is
/// len + 1 (the lower bound covers connected graphs with len edges and
/// maximum degree 2, i.e. P_{len+1} and C_len alike).
class PaperPainter : public Painter {
 public:
  explicit PaperPainter(TargetSpec target);
  EdgeColor color(const GameState& state, Edge e) override;
  int parameter() const { return param_; }

 private:
  int param_;
};

class ScriptedPainter : public Painter {
 public:
  explicit ScriptedPainter(std::vector<EdgeColor> script) : script_(std::move(script)) {}
  EdgeColor color(const GameState& state, Edge) override {
    if (state.round >= static_cast<int>(script_.size()))
      throw StrategyFault("painter out of script");
    return script_[state.round];
  }

 private:
  std::vector<EdgeColor> script_;
};

class UniformRandomPainter : public Painter {
 public:
  explicit UniformRandomPainter(uint64_t seed) : rng_(seed) {}
  EdgeColor color(const GameState&, Edge) override {
    return static_cast<EdgeColor>(rng_() % 3);
  }

 private:
  std::mt19937_64 rng_;
};

/// Uniform over the colors that do not immediately complete a red/blue P3
/// (green always qualifies); falls back to uniform over all three if none do.
class NonLosingRandomPainter : public Painter {
 public:
  explicit NonLosingRandomPainter(uint64_t seed) : rng_(seed) {}
  EdgeColor color(const GameState& state, Edge e) override;

 private:
  std::mt19937_64 rng_;
};

}  // namespace oramsey
