#include "oramsey/game.hpp"

#include <ostream>
#include <sstream>

#include "json.hpp"

namespace oramsey {

void apply_move(GameState& state, Edge e, EdgeColor c) {
  try {
    state.graph.add_edge(e.u, e.v, c);
  } catch (const GraphError& err) {
    throw IllegalMoveError(err.what());
  }
  state.round += 1;
  state.log.push_back({state.round, e, c});
}

namespace {

std::optional<Outcome> green_target_hit(const GameState& state, const TargetSpec& t) {
  if (t.family == TargetSpec::Family::Path) {
    auto w = green_path_witness(state.graph, t.length);
    if (!w.empty()) return Outcome{Winner::BuilderGreen, state.round, std::move(w)};
  } else {
    auto w = green_cycle_witness(state.graph, t.length);
    if (!w.empty()) return Outcome{Winner::BuilderGreen, state.round, std::move(w)};
  }
  return std::nullopt;
}

}  // namespace

std::optional<Outcome> winner(const GameState& state, const TargetSpec& t) {
  if (auto p = find_mono_p3(state.graph, EdgeColor::Red))
    return Outcome{Winner::BuilderRed, state.round, {(*p)[0], (*p)[1], (*p)[2]}};
  if (auto p = find_mono_p3(state.graph, EdgeColor::Blue))
    return Outcome{Winner::BuilderBlue, state.round, {(*p)[0], (*p)[1], (*p)[2]}};
  return green_target_hit(state, t);
}

std::optional<Outcome> winner_after_move(const GameState& state, const TargetSpec& t,
                                         const MoveRecord& last) {
  if (last.color != EdgeColor::Green) {
    // A new red/blue P3 must pass through an endpoint of the new edge.
    if (state.graph.color_degree(last.edge.u, last.color) >= 2 ||
        state.graph.color_degree(last.edge.v, last.color) >= 2) {
      auto p = find_mono_p3(state.graph, last.color);
      Winner w = last.color == EdgeColor::Red ? Winner::BuilderRed : Winner::BuilderBlue;
      return Outcome{w, state.round, {(*p)[0], (*p)[1], (*p)[2]}};
    }
    return std::nullopt;
  }
  return green_target_hit(state, t);
}

std::string color_name(EdgeColor c) { return std::string(1, color_letter(c)); }

std::string winner_name(Winner w) {
  switch (w) {
    case Winner::BuilderRed: return "builder_red";
    case Winner::BuilderBlue: return "builder_blue";
    case Winner::BuilderGreen: return "builder_green";
    case Winner::PainterSurvived: return "painter";
  }
  return "?";
}

void write_transcript(std::ostream& os, const Transcript& t) {
  for (const auto& m : t.moves) {
    os << "{\"round\":" << m.round << ",\"edge\":[" << m.edge.u << "," << m.edge.v
       << "],\"color\":\"" << color_letter(m.color) << "\"}\n";
  }
  os << "{\"result\":\"" << winner_name(t.outcome.winner)
     << "\",\"rounds\":" << t.outcome.rounds << ",\"witness\":[";
  for (size_t i = 0; i < t.outcome.witness.size(); ++i) {
    if (i) os << ",";
    os << t.outcome.witness[i];
  }
  os << "]}\n";
}

std::string transcript_to_string(const Transcript& t) {
  std::ostringstream os;
  write_transcript(os, t);
  return os.str();
}

Transcript read_transcript(std::istream& is, const TargetSpec& target) {
  Transcript t;
  t.target = target;
  std::string line;
  bool saw_outcome = false;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    auto j = nlohmann::json::parse(line);
    if (j.contains("result")) {
      std::string r = j["result"];
      if (r == "builder_red")
        t.outcome.winner = Winner::BuilderRed;
      else if (r == "builder_blue")
        t.outcome.winner = Winner::BuilderBlue;
      else if (r == "builder_green")
        t.outcome.winner = Winner::BuilderGreen;
      else if (r == "painter")
        t.outcome.winner = Winner::PainterSurvived;
      else
        throw std::runtime_error("unknown result: " + r);
      t.outcome.rounds = j["rounds"];
      t.outcome.witness = j["witness"].get<std::vector<VertexId>>();
      saw_outcome = true;
    } else {
      MoveRecord m;
      m.round = j["round"];
      m.edge = Edge(j["edge"][0].get<VertexId>(), j["edge"][1].get<VertexId>());
      std::string c = j["color"];
      if (c == "R")
        m.color = EdgeColor::Red;
      else if (c == "B")
        m.color = EdgeColor::Blue;
      else if (c == "G")
        m.color = EdgeColor::Green;
      else
        throw std::runtime_error("unknown color: " + c);
      t.moves.push_back(m);
    }
  }
  if (!saw_outcome) throw std::runtime_error("transcript missing outcome record");
  return t;
}

bool replay_matches(const Transcript& t) {
  GameState state;
  std::optional<Outcome> hit;
  for (const auto& m : t.moves) {
    if (hit) return false;  // moves after a win
    apply_move(state, m.edge, m.color);
    if (m.round != state.round) return false;
    hit = winner(state, t.target);
  }
  if (hit) return *hit == t.outcome;
  return t.outcome.winner == Winner::PainterSurvived &&
         t.outcome.rounds == static_cast<int>(t.moves.size()) && t.outcome.witness.empty();
}

}  // namespace oramsey
