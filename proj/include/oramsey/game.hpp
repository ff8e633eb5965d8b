#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "oramsey/colored_graph.hpp"

namespace oramsey {

/// The triple of winning patterns. The red and blue targets are always P3;
/// only the green target varies.
struct TargetSpec {
  enum class Family { Path, Cycle };
  Family family = Family::Path;
  int length = 2;  // >= 2 for Path, >= 3 for Cycle

  static TargetSpec path(int len) { return {Family::Path, len}; }
  static TargetSpec cycle(int len) { return {Family::Cycle, len}; }
  bool operator==(const TargetSpec&) const = default;
};

struct MoveRecord {
  int round = 0;  // 1-based
  Edge edge;
  EdgeColor color = EdgeColor::Red;
  bool operator==(const MoveRecord&) const = default;
};

/// Board plus round counter and move log; the engine's single source of
/// truth. Invariant: round == log.size() == graph.edge_count().
struct GameState {
  ColoredGraph graph;
  int round = 0;
  std::vector<MoveRecord> log;
};

struct IllegalMoveError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Adds one colored edge, growing the vertex set on demand (a move may
/// reference up to two fresh ids). Throws IllegalMoveError on duplicate
/// edges or self-loops.
void apply_move(GameState& state, Edge e, EdgeColor c);

enum class Winner { BuilderRed, BuilderBlue, BuilderGreen, PainterSurvived };

struct Outcome {
  Winner winner = Winner::PainterSurvived;
  int rounds = 0;
  std::vector<VertexId> witness;  // the winning pattern; empty for Painter
  bool operator==(const Outcome&) const = default;
};

/// Checks red P3, blue P3, then the green target, in that order; returns the
/// first hit with its witness. Full-board scan.
std::optional<Outcome> winner(const GameState& state, const TargetSpec& t);

/// Equivalent to winner() under the engine invariant that no win existed
/// before the last applied move; only patterns through that move's endpoints
/// are checked, which makes the per-move check cheap.
std::optional<Outcome> winner_after_move(const GameState& state, const TargetSpec& t,
                                         const MoveRecord& last);

/// Round-by-round record of one game. Replayable: applying the moves to an
/// empty board reproduces the final state and outcome.
struct Transcript {
  TargetSpec target;
  std::vector<MoveRecord> moves;
  Outcome outcome;
};

std::string color_name(EdgeColor c);
std::string winner_name(Winner w);

/// One JSON record per line: each move as
/// {"round":r,"edge":[u,v],"color":"R"|"B"|"G"} followed by one outcome
/// record {"result":...,"rounds":n,"witness":[...]}.
void write_transcript(std::ostream& os, const Transcript& t);
std::string transcript_to_string(const Transcript& t);

/// Parses the serialized form back. Throws std::runtime_error on malformed
/// input.
Transcript read_transcript(std::istream& is, const TargetSpec& target);

/// Applies the transcript's moves from an empty board and recomputes the
/// outcome; true iff both match the recorded outcome.
bool replay_matches(const Transcript& t);

}  // namespace oramsey
