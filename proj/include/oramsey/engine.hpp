#pragma once

#include <functional>
#include <memory>
#include <string>
#include <utility>

#include "oramsey/game.hpp"

namespace oramsey {

/// Thrown by MoveSession::draw the moment a winning pattern appears. Builder
/// strategies are written as straight-line programs; an early win (Painter
/// completing a red/blue P3 mid-gadget) unwinds the whole strategy stack and
/// run_game converts it into a Builder outcome.
struct GameWon {
  Outcome outcome;
};

/// Thrown by MoveSession::draw when the round budget is exhausted before a
/// win. Budget exhaustion is a Painter outcome, not an error.
struct BudgetExhausted {};

/// A strategy violated its interface: illegal move, script exhausted, an
/// "it must be green" edge refuted without producing a mono P3, or a budget
/// overrun inside a lemma whose bound should have held.
struct StrategyFault : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Colors each newly drawn edge. Implementations must be deterministic
/// functions of (state, edge) plus any internal memory; the paper painters
/// derive their memory from the state's log so they branch soundly in
/// exhaustive searches.
class Painter {
 public:
  virtual ~Painter() = default;
  virtual EdgeColor color(const GameState& state, Edge e) = 0;
};

/// Engine facade handed to Builder programs. Each draw() applies the move,
/// asks the Painter, and win-checks; strategies may therefore rely on "this
/// edge must be green or I win" exactly as the round-budget arguments assume.
class MoveSession {
 public:
  MoveSession(GameState& state, Painter& painter, TargetSpec target, int budget)
      : state_(state), painter_(painter), target_(target), budget_(budget) {}

  const ColoredGraph& graph() const { return state_.graph; }
  const GameState& state() const { return state_; }
  int round() const { return state_.round; }
  TargetSpec target() const { return target_; }

  /// Next unused vertex id; allocated only when a draw references it.
  VertexId next_fresh() const { return state_.graph.vertex_count(); }

  /// Draws edge {u,v}; Painter colors it immediately. Throws GameWon on any
  /// winning pattern, BudgetExhausted past the budget, StrategyFault on an
  /// illegal move.
  EdgeColor draw(VertexId u, VertexId v);

  /// Draws an edge the strategy claims is forced green (a non-green reply
  /// would complete a mono P3 and end the game inside draw()). Reaching the
  /// return with a non-green color means the claim was wrong: StrategyFault.
  void draw_forced_green(VertexId u, VertexId v);

  /// Records a named phase boundary at the current round (e.g. the start of
  /// the final cycle-connection phase) for verification harnesses.
  void mark(std::string label) { marks_.emplace_back(std::move(label), state_.round); }
  const std::vector<std::pair<std::string, int>>& marks() const { return marks_; }

 private:
  GameState& state_;
  Painter& painter_;
  TargetSpec target_;
  int budget_;
  std::vector<std::pair<std::string, int>> marks_;
};

/// A Builder strategy: a program that keeps drawing until GameWon unwinds
/// it. Re-invoking the program restarts the strategy from scratch, which is
/// how adversarial searches branch.
using BuilderProgram = std::function<void(MoveSession&)>;

/// Alternates Builder proposal / Painter reply / win check until Builder
/// wins or the budget is exhausted. StrategyFault propagates to the caller.
Transcript run_game(const BuilderProgram& builder, Painter& painter, TargetSpec target,
                    int budget);

/// As run_game but also exposes the session marks (phase boundaries).
Transcript run_game(const BuilderProgram& builder, Painter& painter, TargetSpec target,
                    int budget, std::vector<std::pair<std::string, int>>* marks_out);

}  // namespace oramsey
