#pragma once

#include "oramsey/builder_common.hpp"

namespace oramsey {

/// The Figure-2 gadgets (cycle game), labels v1..v4:
///   G1c: green v1v4; blue v2v4; red v3v4             (3 rounds)
///   G2c: green v1v2, v1v3, v2v4                      (3 rounds)
///   G3c: green v1v3, v2v4, v1v4; non-green v3v4
///   G4c: green v2v4, v1v4; non-green v1v3, v3v4 (one red, one blue)
///   G5c: green v1v2, v1v3; non-green v2v4, v3v4 (one red, one blue)
///   G6c: green v1v2, v1v3, v2v4; non-green v3v4
enum class CUnitKind { G1c, G2c, G3c, G4c, G5c, G6c };

struct CUnitHandle {
  CUnitKind kind;
  VertexId v1, v2, v3, v4;
};

void validate_cunit(const ColoredGraph& g, const CUnitHandle& u);

/// G1c or G2c within 3 rounds, else one of G3c..G6c by round 4.
CUnitHandle build_small_unit(MoveSession& s);

/// The three-pendant star of G1c by role.
struct G1cHandle {
  VertexId green_end, blue_end, red_end, center;
};

/// A cycle C_{k+1} that is green except for one adjacent red-blue pair:
/// spine = the green path v1..vk, apex joined red to spine.front() and blue
/// to spine.back().
struct CrbHandle {
  std::vector<VertexId> spine;
  VertexId apex;
};

/// The Figure-3 gadgets built in 2-3 rounds.
///   kind 1: v = the green P3 (three vertices in path order)
///   kind 2: v[0]/v[1] = base joined red/blue to the apex v[2]; green base edge
///   kind 3: v[0],v[1] = non-green pair; green edges to the apex v[2]
struct HUnit {
  int kind;
  std::array<VertexId, 3> v;
};

HUnit build_h_family(MoveSession& s);

/// Figure 4: green spine of six vertices with non-green chords
/// (spine[0],spine[2]) and (spine[3],spine[5]).
struct HGraph {
  std::array<VertexId, 6> spine;
};

/// Joins two disjoint green paths into a green P_{n+k} (variants of the
/// three-round joining lemma):
///   1: both good (n,k >= 2)          -> good in 1 or better within 3
///   2: pn good (n,k >= 2)            -> good within 2 or better within 3
///   3: pn better (n >= 3, k >= 2)    -> better within 2
///   4: none (n >= 3, k >= 2)         -> green in 1, good in 2, better in 4
PathHandle join_paths(MoveSession& s, PathHandle pn, PathHandle pk, int variant);

/// Absorbs a C^RB cycle into a disjoint green P_n: a better P_{n+k+1} within
/// 3 rounds (2 when pn is good).
PathHandle absorb_crb(MoveSession& s, const CrbHandle& crb, PathHandle pn);

/// G1c plus a disjoint green P_n (n >= 2): a better P_{n+4} within 5 rounds
/// (4 when pn is good).
PathHandle g1c_absorb(MoveSession& s, const G1cHandle& u, PathHandle pn);

struct P8Variant {
  enum class Kind { DoubleG1, Green, Good, Better } kind;
  PathHandle path;       // all kinds except DoubleG1
  G1cHandle g1a, g1b;    // DoubleG1 only
};

/// Two small units merged by the pair case analysis: G1c u G1c within 6
/// rounds, or a green P8 within 7, good within 9, better within 11.
P8Variant build_p8_variant(MoveSession& s);

/// From G1c u G1c in at most 6 further rounds: a better P8 whose good
/// endpoint is incident to an edge of the requested color.
PathHandle double_g1_to_better_p8(MoveSession& s, const G1cHandle& a, const G1cHandle& b,
                                  EdgeColor good_end_color);

/// From G1c u G1c in 5 forced rounds: a good P8 whose good endpoint is
/// incident to an edge of the requested color (the other endpoint plain).
PathHandle double_g1_to_good_p8(MoveSession& s, const G1cHandle& a, const G1cHandle& b,
                                EdgeColor good_end_color);

struct P9Variant {
  enum class Kind { Green, Better, Best } kind;
  PathHandle path;
};

/// Green P9 within 10 rounds, better within 13, or best within 14.
P9Variant build_p9_variant(MoveSession& s);

struct P6Variant {
  enum class Kind { Green, Good, Hgraph, Better, Best } kind;
  PathHandle path;  // all kinds except Hgraph
  HGraph h;
};

/// Two Figure-3 gadgets merged: green P6 within 5 rounds, good within 6, the
/// Figure-4 graph within 7, better within 8, or best within 9.
P6Variant build_p6_variant(MoveSession& s);

/// Extends a better P_n (n >= 3) to a better P_{n+1} within 2 rounds.
PathHandle extend_better_one(MoveSession& s, PathHandle p);

/// Closes a green P_k (k >= 6) into a green C_k within 5 rounds (4 when the
/// path is good and its endpoints are nonadjacent). Ends the game.
void close_cycle(MoveSession& s, PathHandle p);

/// Connects two disjoint green paths (n,k >= 3) into a green C_{n+k}:
///   1: both good -> 5 rounds;  2: pn good -> 6;  3: none -> 7;
///   4: pn better -> 3. Ends the game.
void connect_cycle(MoveSession& s, PathHandle pn, PathHandle pk, int variant);

/// Closes HGraph + disjoint green P_n (n >= 2) into a green C_{n+6} within
/// 4 rounds. Ends the game.
void h_close_cycle(MoveSession& s, const HGraph& h, PathHandle p);

/// Green P_{4k-5} within 6k-11 rounds, good within 6k-9, or better within
/// 6k-8 (k >= 4).
PathHandle build_p4k_minus5(MoveSession& s, int k);

/// Forces a red P3, blue P3, or green C_len (len >= 16) within the
/// closed-form budget, dispatching on len mod 4. Always exits via GameWon.
void force_green_cycle(MoveSession& s, int len);

BuilderProgram paper_cycle_builder(int len);

}  // namespace oramsey
