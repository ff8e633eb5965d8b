#include "oramsey/builder_path.hpp"

#include <algorithm>

namespace oramsey {

namespace {

void expect_edge(const ColoredGraph& g, VertexId a, VertexId b, EdgeColor c) {
  auto col = g.edge_color(a, b);
  if (!col || *col != c) throw StrategyFault("unit re-validation failed");
}

void expect_nongreen(const ColoredGraph& g, VertexId a, VertexId b) {
  auto col = g.edge_color(a, b);
  if (!col || *col == EdgeColor::Green) throw StrategyFault("unit re-validation failed");
}

}  // namespace

void validate_unit(const ColoredGraph& g, const UnitHandle& u) {
  const auto G = EdgeColor::Green, R = EdgeColor::Red, B = EdgeColor::Blue;
  switch (u.kind) {
    case UnitKind::G1:
      expect_edge(g, u.v1, u.v4, G);
      expect_edge(g, u.v2, u.v3, G);
      expect_edge(g, u.v2, u.v4, B);
      expect_edge(g, u.v3, u.v4, R);
      break;
    case UnitKind::G2:
      expect_edge(g, u.v1, u.v3, G);
      expect_edge(g, u.v2, u.v4, G);
      expect_edge(g, u.v1, u.v4, G);
      expect_nongreen(g, u.v3, u.v4);
      break;
    case UnitKind::G3: {
      expect_edge(g, u.v1, u.v4, G);
      expect_edge(g, u.v1, u.v3, G);
      expect_nongreen(g, u.v3, u.v4);
      expect_nongreen(g, u.v2, u.v4);
      if (g.edge_color(u.v3, u.v4) == g.edge_color(u.v2, u.v4))
        throw StrategyFault("unit re-validation failed");
      break;
    }
    case UnitKind::G4:
      expect_edge(g, u.v1, u.v2, G);
      expect_edge(g, u.v1, u.v3, G);
      expect_edge(g, u.v2, u.v4, B);
      expect_edge(g, u.v3, u.v4, R);
      break;
    case UnitKind::G5:
      expect_edge(g, u.v1, u.v2, G);
      expect_edge(g, u.v1, u.v3, G);
      expect_edge(g, u.v2, u.v4, G);
      expect_nongreen(g, u.v3, u.v4);
      break;
    case UnitKind::G6:
      expect_edge(g, u.v1, u.v2, G);
      expect_edge(g, u.v1, u.v3, G);
      expect_edge(g, u.v2, u.v4, G);
      expect_edge(g, u.v3, u.v4, G);
      break;
  }
}

UnitHandle build_unit(MoveSession& s) {
  RoundGuard guard(s);
  const auto Green = EdgeColor::Green, Red = EdgeColor::Red;

  VertexId a = s.next_fresh();
  VertexId b = a + 1;
  EdgeColor c1 = s.draw(a, b);
  VertexId c = s.next_fresh();
  EdgeColor c2 = s.draw(b, c);
  int greens = (c1 == Green) + (c2 == Green);

  UnitHandle u{};
  if (greens == 0) {
    // One red, one blue (equal colors would have been a mono P3). Close the
    // endpoints and hang a pendant off the center.
    s.draw_forced_green(a, c);
    VertexId d = s.next_fresh();
    s.draw_forced_green(b, d);
    VertexId red_end = c1 == Red ? a : c;
    VertexId blue_end = c1 == Red ? c : a;
    u = {UnitKind::G1, d, blue_end, red_end, b};
  } else if (greens == 1) {
    VertexId e_end = c1 == Green ? c : a;  // endpoint on the non-green edge
    VertexId m_end = c1 == Green ? a : c;
    EdgeColor h = c1 == Green ? c2 : c1;   // color of (b, e_end)
    EdgeColor e1 = s.draw(a, c);
    VertexId d = s.next_fresh();
    if (e1 != Green) {
      // e1 is the opposite of h, so e_end carries both colors.
      s.draw_forced_green(e_end, d);
      VertexId red_nbr = h == Red ? b : m_end;
      VertexId blue_nbr = h == Red ? m_end : b;
      u = {UnitKind::G1, d, blue_nbr, red_nbr, e_end};
    } else {
      EdgeColor e2 = s.draw(e_end, d);
      u = {e2 == Green ? UnitKind::G2 : UnitKind::G3, m_end, d, b, e_end};
    }
  } else {
    // All-green P3 a-b-c; attach a new vertex to both endpoints.
    VertexId d = s.next_fresh();
    EdgeColor f1 = s.draw(a, d);
    EdgeColor f2 = s.draw(c, d);
    int new_greens = (f1 == Green) + (f2 == Green);
    if (new_greens == 0) {
      VertexId red_end = f1 == Red ? a : c;
      VertexId blue_end = f1 == Red ? c : a;
      u = {UnitKind::G4, b, blue_end, red_end, d};
    } else if (new_greens == 1) {
      VertexId green_end = f1 == Green ? a : c;
      VertexId other = f1 == Green ? c : a;
      u = {UnitKind::G5, b, green_end, other, d};
    } else {
      u = {UnitKind::G6, b, a, c, d};
    }
  }
  guard.require(4, "build_unit");
  validate_unit(s.graph(), u);
  return u;
}

PathHandle extend_with_unit(MoveSession& s, PathHandle p, const UnitHandle& u) {
  RoundGuard guard(s);
  const ColoredGraph& g = s.graph();
  bool good = path_class(g, p) >= PathClass::Good;
  if (good) p = orient_good_front(g, p);
  VertexId u1 = p.front(), u2 = p.back();

  PathHandle out;
  switch (u.kind) {
    case UnitKind::G3:
      s.draw_forced_green(u.v2, u.v3);
      s.draw_forced_green(u.v4, u1);
      out = cat({seq({u.v2, u.v3, u.v1, u.v4}), p.v});
      break;

    case UnitKind::G2:
    case UnitKind::G5: {
      std::vector<VertexId> spine = u.kind == UnitKind::G2
                                        ? seq({u.v2, u.v4, u.v1, u.v3})
                                        : seq({u.v4, u.v2, u.v1, u.v3});
      if (s.draw(u.v3, u1) == EdgeColor::Green) {
        out = cat({spine, p.v});
      } else {
        s.draw_forced_green(u.v3, u2);
        out = cat({spine, reversed(p).v});
      }
      break;
    }

    case UnitKind::G1:
    case UnitKind::G4: {
      bool g1 = u.kind == UnitKind::G1;
      auto via_v3 = [&](const PathHandle& mid) {
        return g1 ? cat({seq({u.v2, u.v3}), mid.v, seq({u.v4, u.v1})})
                  : cat({seq({u.v2, u.v1, u.v3}), mid.v, seq({u.v4})});
      };
      if (good) {
        s.draw_forced_green(u.v4, u2);
        if (g.color_degree(u1, EdgeColor::Red) > 0) {
          s.draw_forced_green(u.v2, u1);
          out = g1 ? cat({seq({u.v1, u.v4}), reversed(p).v, seq({u.v2, u.v3})})
                   : cat({seq({u.v3, u.v1, u.v2}), p.v, seq({u.v4})});
        } else {
          s.draw_forced_green(u.v3, u1);
          out = via_v3(p);
        }
      } else if (s.draw(u.v3, u1) == EdgeColor::Green) {
        s.draw_forced_green(u.v4, u2);
        out = via_v3(p);
      } else {
        // The reply is blue (red would close a red P3 at v3); v3 is better now.
        s.draw_forced_green(u.v3, u2);
        s.draw_forced_green(u.v4, u1);
        out = via_v3(reversed(p));
      }
      break;
    }

    case UnitKind::G6: {
      if (s.draw(u.v1, u1) == EdgeColor::Green) {
        out = cat({seq({u.v2, u.v4, u.v3, u.v1}), p.v});
      } else if (good) {
        s.draw_forced_green(u.v3, u1);
        out = cat({seq({u.v1, u.v2, u.v4, u.v3}), p.v});
      } else if (s.draw(u.v2, u1) == EdgeColor::Green) {
        out = cat({seq({u.v1, u.v3, u.v4, u.v2}), p.v});
      } else {
        s.draw_forced_green(u.v3, u1);
        out = cat({seq({u.v1, u.v2, u.v4, u.v3}), p.v});
      }
      break;
    }
  }

  guard.require(good ? 2 : 3, "extend_with_unit");
  if (out.size() != p.size() + 4) throw StrategyFault("extend_with_unit: wrong length");
  bool out_good = path_class(g, out) >= PathClass::Good;
  if (guard.used() > 1 && !out_good)
    throw StrategyFault("extend_with_unit: multi-round branch must yield a good path");
  validate_path(g, out);
  return out;
}

PathHandle extend_by_four(MoveSession& s, PathHandle p) {
  RoundGuard guard(s);
  bool good_in = path_class(s.graph(), p) >= PathClass::Good;
  UnitHandle u = build_unit(s);
  PathHandle out = extend_with_unit(s, std::move(p), u);
  bool good_out = path_class(s.graph(), out) >= PathClass::Good;
  guard.require(good_in ? (good_out ? 6 : 5) : (good_out ? 7 : 5), "extend_by_four");
  return out;
}

namespace {

// Base P2 via one P3: any green edge serves; otherwise the center of a
// red-blue P3 extends by a forced green edge.
PathHandle seed_p2(MoveSession& s) {
  RoundGuard guard(s);
  VertexId a = s.next_fresh();
  VertexId b = a + 1;
  EdgeColor c1 = s.draw(a, b);
  VertexId c = s.next_fresh();
  EdgeColor c2 = s.draw(b, c);
  PathHandle out;
  if (c1 == EdgeColor::Green) {
    out.v = {a, b};
  } else if (c2 == EdgeColor::Green) {
    out.v = {b, c};
  } else {
    VertexId d = s.next_fresh();
    s.draw_forced_green(b, d);
    out.v = {b, d};
  }
  guard.require(path_class(s.graph(), out) == PathClass::Bad ? 2 : 3, "seed P2");
  return out;
}

PathHandle seed_p5(MoveSession& s) {
  RoundGuard guard(s);
  UnitHandle u = build_unit(s);
  const ColoredGraph& g = s.graph();
  PathHandle out;
  switch (u.kind) {
    case UnitKind::G1:
    case UnitKind::G3:
    case UnitKind::G4: {
      // Two probes from v2 (at least one green); then u0v4 is forced.
      VertexId u0 = s.next_fresh();
      if (s.draw(u.v2, u0) != EdgeColor::Green) {
        u0 = s.next_fresh();
        s.draw_forced_green(u.v2, u0);
      }
      s.draw_forced_green(u0, u.v4);
      if (u.kind == UnitKind::G1)
        out.v = {u.v3, u.v2, u0, u.v4, u.v1};
      else if (u.kind == UnitKind::G3)
        out.v = {u.v3, u.v1, u.v4, u0, u.v2};
      else
        out.v = {u.v3, u.v1, u.v2, u0, u.v4};
      break;
    }
    case UnitKind::G2:
    case UnitKind::G5: {
      VertexId u0 = s.next_fresh();
      if (s.draw(u.v3, u0) != EdgeColor::Green) {
        u0 = s.next_fresh();
        s.draw_forced_green(u.v3, u0);
      }
      out = u.kind == UnitKind::G2 ? PathHandle{{u.v2, u.v4, u.v1, u.v3, u0}}
                                   : PathHandle{{u.v4, u.v2, u.v1, u.v3, u0}};
      break;
    }
    case UnitKind::G6: {
      VertexId u0 = s.next_fresh();
      if (s.draw(u0, u.v3) == EdgeColor::Green) {
        out.v = {u0, u.v3, u.v1, u.v2, u.v4};
      } else if (s.draw(u0, u.v4) == EdgeColor::Green) {
        out.v = {u0, u.v4, u.v2, u.v1, u.v3};
      } else {
        s.draw_forced_green(u0, u.v1);
        out.v = {u0, u.v1, u.v2, u.v4, u.v3};
      }
      break;
    }
  }
  guard.require(path_class(g, out) == PathClass::Bad ? 6 : 7, "seed P5");
  validate_path(g, out);
  return out;
}

PathHandle seed_p7(MoveSession& s) {
  RoundGuard guard(s);
  const auto Green = EdgeColor::Green, Red = EdgeColor::Red;
  VertexId u0 = s.next_fresh();
  VertexId l1 = u0 + 1;
  EdgeColor c1 = s.draw(u0, l1);
  VertexId l2 = s.next_fresh();
  EdgeColor c2 = s.draw(u0, l2);
  VertexId l3 = s.next_fresh();
  EdgeColor c3 = s.draw(u0, l3);

  int greens = (c1 == Green) + (c2 == Green) + (c3 == Green);
  const ColoredGraph& g = s.graph();
  PathHandle out;
  if (greens >= 2) {
    // A green P3 through the hub; extend it by a fresh unit.
    std::vector<VertexId> ends;
    if (c1 == Green) ends.push_back(l1);
    if (c2 == Green) ends.push_back(l2);
    if (c3 == Green) ends.push_back(l3);
    PathHandle p3{{ends[0], u0, ends[1]}};
    UnitHandle u = build_unit(s);
    out = extend_with_unit(s, p3, u);
  } else {
    // The star is red, blue, green in some order (two likes would have lost).
    VertexId ge = c1 == Green ? l1 : c2 == Green ? l2 : l3;
    VertexId re = c1 == Red ? l1 : c2 == Red ? l2 : l3;
    VertexId be = l1 + l2 + l3 - ge - re;
    UnitHandle u = build_unit(s);
    switch (u.kind) {
      case UnitKind::G1:
        s.draw_forced_green(u0, u.v1);
        s.draw_forced_green(re, u.v2);
        s.draw_forced_green(re, u.v4);
        out.v = {u.v3, u.v2, re, u.v4, u.v1, u0, ge};
        break;
      case UnitKind::G4:
        s.draw_forced_green(u0, u.v4);
        s.draw_forced_green(re, u.v2);
        s.draw_forced_green(re, u.v4);
        out.v = {u.v3, u.v1, u.v2, re, u.v4, u0, ge};
        break;
      case UnitKind::G3: {
        // Pair v2 with the star leaf of the opposite color.
        VertexId mate = g.edge_color(u.v2, u.v4) == EdgeColor::Blue ? re : be;
        s.draw_forced_green(u0, u.v4);
        s.draw_forced_green(mate, u.v2);
        s.draw_forced_green(u.v2, u.v3);
        out.v = {mate, u.v2, u.v3, u.v1, u.v4, u0, ge};
        break;
      }
      case UnitKind::G2:
      case UnitKind::G5:
      case UnitKind::G6: {
        if (s.draw(ge, re) == Green) {
          s.draw_forced_green(u0, u.v3);
          out = u.kind == UnitKind::G2
                    ? PathHandle{{re, ge, u0, u.v3, u.v1, u.v4, u.v2}}
                    : PathHandle{{re, ge, u0, u.v3, u.v1, u.v2, u.v4}};
        } else {
          // The probe came back blue; re is better now.
          s.draw_forced_green(re, u.v3);
          if (u.kind == UnitKind::G2) {
            s.draw_forced_green(u0, u.v2);
            out.v = {re, u.v3, u.v1, u.v4, u.v2, u0, ge};
          } else {
            s.draw_forced_green(u0, u.v4);
            out.v = {re, u.v3, u.v1, u.v2, u.v4, u0, ge};
          }
        }
        break;
      }
    }
  }
  guard.require(path_class(g, out) == PathClass::Bad ? 9 : 10, "seed P7");
  validate_path(g, out);
  return out;
}

// Two disjoint units, merged into a P8 by the pair case analysis.
PathHandle seed_p8(MoveSession& s) {
  RoundGuard guard(s);
  UnitHandle a = build_unit(s);
  UnitHandle b = build_unit(s);
  const ColoredGraph& g = s.graph();

  auto inner_p4 = [](const UnitHandle& u) -> PathHandle {
    // The green P4 inside G2/G5/G6, oriented with the v3 end last.
    if (u.kind == UnitKind::G2) return {{u.v2, u.v4, u.v1, u.v3}};
    if (u.kind == UnitKind::G5) return {{u.v4, u.v2, u.v1, u.v3}};
    return {{u.v4, u.v2, u.v1, u.v3}};  // G6
  };
  auto has_kind = [&](UnitKind k) -> const UnitHandle* {
    if (a.kind == k) return &a;
    if (b.kind == k) return &b;
    return nullptr;
  };
  auto other_of = [&](const UnitHandle* u) -> const UnitHandle& {
    return u == &a ? b : a;
  };

  PathHandle out;
  if (const UnitHandle* u = has_kind(UnitKind::G2); u || (u = has_kind(UnitKind::G5))) {
    out = extend_with_unit(s, inner_p4(*u), other_of(u));
  } else if (const UnitHandle* u6 = has_kind(UnitKind::G6)) {
    out = extend_with_unit(s, inner_p4(*u6), other_of(u6));
  } else if (const UnitHandle* u3 = has_kind(UnitKind::G3)) {
    s.draw_forced_green(u3->v2, u3->v3);
    PathHandle p4{{u3->v2, u3->v3, u3->v1, u3->v4}};
    out = extend_with_unit(s, p4, other_of(u3));
  } else {
    // Both units in {G1, G4}; normalize so G1 comes first.
    if (a.kind == UnitKind::G4 && b.kind == UnitKind::G1) std::swap(a, b);
    if (a.kind == UnitKind::G1 && b.kind == UnitKind::G1) {
      s.draw_forced_green(a.v4, b.v1);
      s.draw_forced_green(b.v4, a.v2);
      s.draw_forced_green(a.v3, b.v2);
      out.v = {a.v1, a.v4, b.v1, b.v4, a.v2, a.v3, b.v2, b.v3};
    } else if (a.kind == UnitKind::G4 && b.kind == UnitKind::G4) {
      s.draw_forced_green(a.v3, b.v4);
      s.draw_forced_green(b.v4, a.v4);
      s.draw_forced_green(a.v4, b.v2);
      out.v = {a.v2, a.v1, a.v3, b.v4, a.v4, b.v2, b.v1, b.v3};
    } else {
      // (G1, G4)
      s.draw_forced_green(a.v3, b.v4);
      s.draw_forced_green(b.v4, a.v1);
      s.draw_forced_green(a.v4, b.v2);
      out.v = {a.v2, a.v3, b.v4, a.v1, a.v4, b.v2, b.v1, b.v3};
    }
  }
  guard.require(path_class(g, out) == PathClass::Bad ? 10 : 11, "seed P8");
  validate_path(g, out);
  return out;
}

}  // namespace

PathHandle seed_path(MoveSession& s, int residue) {
  switch (residue) {
    case 0: return seed_p8(s);
    case 1: return seed_p5(s);
    case 2: return seed_p2(s);
    case 3: return seed_p7(s);
    default: throw StrategyFault("seed_path: residue must be in 0..3");
  }
}

PathHandle grow_green_path(MoveSession& s, int len) {
  if (len % 4 != 0 || len < 8) throw StrategyFault("grow_green_path: len must be 4k, k >= 2");
  RoundGuard guard(s);
  PathHandle p = seed_path(s, 0);
  while (p.size() < len) p = extend_by_four(s, p);
  int k = len / 4;
  guard.require(path_class(s.graph(), p) == PathClass::Bad ? 6 * k - 2 : 6 * k - 1,
                "grow_green_path");
  return p;
}

void force_green_path(MoveSession& s, int len) {
  if (len < 2) throw StrategyFault("force_green_path: len must be >= 2");

  if (len == 3) {
    // A star K_{1,4}: some two of its edges share a color.
    VertexId hub = s.next_fresh();
    s.draw(hub, hub + 1);
    for (int i = 0; i < 3; ++i) s.draw(hub, s.next_fresh());
    throw StrategyFault("force_green_path: K_{1,4} did not decide the game");
  }

  if (len == 4) {
    VertexId hub = s.next_fresh();
    VertexId l1 = hub + 1;
    EdgeColor c1 = s.draw(hub, l1);
    VertexId l2 = s.next_fresh();
    EdgeColor c2 = s.draw(hub, l2);
    VertexId l3 = s.next_fresh();
    EdgeColor c3 = s.draw(hub, l3);
    int greens = (c1 == EdgeColor::Green) + (c2 == EdgeColor::Green) + (c3 == EdgeColor::Green);
    if (greens >= 2) {
      // A green P3 exists; extend one endpoint until a green edge lands.
      VertexId end = c1 == EdgeColor::Green ? l1 : l2;
      for (int i = 0; i < 3; ++i) s.draw(end, s.next_fresh());
      throw StrategyFault("force_green_path: P4 endpoint extension did not decide the game");
    }
    // Exactly one green: the star is red, blue, green. A fourth hub edge is
    // forced green, then the two green leaves are probed against the blue one.
    VertexId ge = c1 == EdgeColor::Green ? l1 : c2 == EdgeColor::Green ? l2 : l3;
    VertexId be = c1 == EdgeColor::Blue ? l1 : c2 == EdgeColor::Blue ? l2 : l3;
    VertexId l4 = s.next_fresh();
    s.draw_forced_green(hub, l4);
    if (s.draw(ge, be) != EdgeColor::Green) s.draw_forced_green(l4, be);
    throw StrategyFault("force_green_path: P4 closing probes did not decide the game");
  }

  if (len == 2) {
    seed_path(s, 2);
  } else {
    PathHandle p = seed_path(s, len % 4);
    while (p.size() < len) p = extend_by_four(s, p);
  }
  throw StrategyFault("force_green_path: target path completed without a win signal");
}

BuilderProgram paper_path_builder(int len) {
  return [len](MoveSession& s) { force_green_path(s, len); };
}

}  // namespace oramsey
