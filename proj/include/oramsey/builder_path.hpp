#pragma once

#include "oramsey/builder_common.hpp"

namespace oramsey {

/// The six 4-vertex gadgets Builder can force in 4 rounds (path game).
/// Template colors, with labels v1..v4:
///   G1: green v1v4, v2v3; blue v2v4; red v3v4
///   G2: green v1v3, v2v4, v1v4; non-green v3v4 (red or blue)
///   G3: green v1v4, v1v3; non-green v3v4 and v2v4 (one red, one blue)
///   G4: green v1v2, v1v3; blue v2v4; red v3v4
///   G5: green v1v2, v1v3, v2v4; non-green v3v4 (red or blue)
///   G6: green v1v2, v1v3, v2v4, v3v4
enum class UnitKind { G1, G2, G3, G4, G5, G6 };

struct UnitHandle {
  UnitKind kind;
  VertexId v1, v2, v3, v4;
};

/// Checks the board subgraph on the handle's labels against the template.
void validate_unit(const ColoredGraph& g, const UnitHandle& u);

/// Builds one of the six units on fresh vertices within 4 rounds.
UnitHandle build_unit(MoveSession& s);

/// Grows a green P_n (n >= 2) by a disjoint unit into a P_{n+4}: from a good
/// path, a P_{n+4} in 1 round or a good P_{n+4} within 2; from a bad path,
/// within 1 or 3 respectively.
PathHandle extend_with_unit(MoveSession& s, PathHandle p, const UnitHandle& u);

/// build_unit followed by extend_with_unit: +5/+6 rounds from a good path,
/// +5/+7 from a bad one.
PathHandle extend_by_four(MoveSession& s, PathHandle p);

/// Base paths per residue class of the target length mod 4:
///   residue 0 -> P8  (bad within 10 rounds or good within 11)
///   residue 1 -> P5  (bad within 6 or good within 7)
///   residue 2 -> P2  (bad within 2 or good within 3)
///   residue 3 -> P7  (bad within 9 or good within 10)
PathHandle seed_path(MoveSession& s, int residue);

/// Repeated extend_by_four from the residue seed: a green P_m within
/// 6(m/4 rounded)-style budgets, m = 0 (mod 4), m >= 8. Used directly by the
/// cycle strategies.
PathHandle grow_green_path(MoveSession& s, int len);

/// Forces a red P3, blue P3, or green P_len within the closed-form round
/// budget. Always exits via GameWon.
void force_green_path(MoveSession& s, int len);

/// Builder program playing force_green_path for the session's target.
BuilderProgram paper_path_builder(int len);

}  // namespace oramsey
