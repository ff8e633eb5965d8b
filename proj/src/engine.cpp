#include "oramsey/engine.hpp"

namespace oramsey {

EdgeColor MoveSession::draw(VertexId u, VertexId v) {
  if (state_.round >= budget_) throw BudgetExhausted{};
  if (u == v) throw StrategyFault("builder proposed a self-loop");
  VertexId cap = state_.graph.vertex_count() + 2;
  if (u < 0 || v < 0 || u >= cap || v >= cap)
    throw StrategyFault("builder referenced an unallocated vertex beyond the fresh pair");
  if (state_.graph.has_edge(u, v)) throw StrategyFault("builder proposed an existing edge");
  Edge e(u, v);
  EdgeColor c = painter_.color(state_, e);
  apply_move(state_, e, c);
  if (auto w = winner_after_move(state_, target_, state_.log.back())) throw GameWon{*w};
  return c;
}

void MoveSession::draw_forced_green(VertexId u, VertexId v) {
  EdgeColor c = draw(u, v);
  if (c != EdgeColor::Green)
    throw StrategyFault("edge (" + std::to_string(u) + "," + std::to_string(v) +
                        ") was expected to be forced green");
}

Transcript run_game(const BuilderProgram& builder, Painter& painter, TargetSpec target,
                    int budget) {
  return run_game(builder, painter, target, budget, nullptr);
}

Transcript run_game(const BuilderProgram& builder, Painter& painter, TargetSpec target,
                    int budget, std::vector<std::pair<std::string, int>>* marks_out) {
  GameState state;
  MoveSession session(state, painter, target, budget);
  Transcript t;
  t.target = target;
  try {
    builder(session);
    throw StrategyFault("builder completed without achieving the target");
  } catch (const GameWon& won) {
    t.outcome = won.outcome;
  } catch (const BudgetExhausted&) {
    t.outcome = Outcome{Winner::PainterSurvived, state.round, {}};
  }
  t.moves = state.log;
  if (marks_out) *marks_out = session.marks();
  return t;
}

}  // namespace oramsey
