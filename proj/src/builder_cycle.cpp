#include "oramsey/builder_cycle.hpp"

#include <algorithm>

namespace oramsey {

namespace {

constexpr auto Green = EdgeColor::Green;
constexpr auto Red = EdgeColor::Red;
constexpr auto Blue = EdgeColor::Blue;

void expect(bool ok) {
  if (!ok) throw StrategyFault("cycle-unit re-validation failed");
}

EdgeColor col(const ColoredGraph& g, VertexId a, VertexId b) {
  auto c = g.edge_color(a, b);
  if (!c) throw StrategyFault("expected an edge during re-validation");
  return *c;
}

// Orients a better/best path with the better endpoint last (good end first).
PathHandle better_back(const ColoredGraph& g, PathHandle p) {
  if (classify_vertex(g, p.front()) == VertexClass::Better &&
      classify_vertex(g, p.back()) != VertexClass::Better)
    return reversed(p);
  return p;
}

std::vector<VertexId> slice(const std::vector<VertexId>& v, size_t from, size_t to) {
  return {v.begin() + from, v.begin() + to};
}

}  // namespace

void validate_cunit(const ColoredGraph& g, const CUnitHandle& u) {
  switch (u.kind) {
    case CUnitKind::G1c:
      expect(col(g, u.v1, u.v4) == Green);
      expect(col(g, u.v2, u.v4) == Blue);
      expect(col(g, u.v3, u.v4) == Red);
      break;
    case CUnitKind::G2c:
      expect(col(g, u.v1, u.v2) == Green);
      expect(col(g, u.v1, u.v3) == Green);
      expect(col(g, u.v2, u.v4) == Green);
      break;
    case CUnitKind::G3c:
      expect(col(g, u.v1, u.v3) == Green);
      expect(col(g, u.v2, u.v4) == Green);
      expect(col(g, u.v1, u.v4) == Green);
      expect(col(g, u.v3, u.v4) != Green);
      break;
    case CUnitKind::G4c:
      expect(col(g, u.v2, u.v4) == Green);
      expect(col(g, u.v1, u.v4) == Green);
      expect(col(g, u.v1, u.v3) != Green);
      expect(col(g, u.v3, u.v4) != Green);
      expect(col(g, u.v1, u.v3) != col(g, u.v3, u.v4));
      break;
    case CUnitKind::G5c:
      expect(col(g, u.v1, u.v2) == Green);
      expect(col(g, u.v1, u.v3) == Green);
      expect(col(g, u.v2, u.v4) != Green);
      expect(col(g, u.v3, u.v4) != Green);
      expect(col(g, u.v2, u.v4) != col(g, u.v3, u.v4));
      break;
    case CUnitKind::G6c:
      expect(col(g, u.v1, u.v2) == Green);
      expect(col(g, u.v1, u.v3) == Green);
      expect(col(g, u.v2, u.v4) == Green);
      expect(col(g, u.v3, u.v4) != Green);
      break;
  }
}

CUnitHandle build_small_unit(MoveSession& s) {
  RoundGuard guard(s);
  VertexId a = s.next_fresh();
  VertexId b = a + 1;
  EdgeColor c1 = s.draw(a, b);
  VertexId c = s.next_fresh();
  EdgeColor c2 = s.draw(b, c);
  int greens = (c1 == Green) + (c2 == Green);

  CUnitHandle u{};
  if (greens == 0) {
    VertexId d = s.next_fresh();
    s.draw_forced_green(b, d);
    u = {CUnitKind::G1c, d, c1 == Red ? c : a, c1 == Red ? a : c, b};
  } else if (greens == 1) {
    VertexId m = c1 == Green ? a : c;  // endpoint of the green edge
    VertexId e = c1 == Green ? c : a;  // endpoint of the non-green edge
    EdgeColor h = c1 == Green ? c2 : c1;
    VertexId d = s.next_fresh();
    EdgeColor e1 = s.draw(b, d);
    if (e1 != Green) {
      // e1 is the opposite of h, so the center carries all three colors.
      u = {CUnitKind::G1c, m, h == Red ? d : e, h == Red ? e : d, b};
    } else {
      EdgeColor e2 = s.draw(a, c);
      u = {e2 == Green ? CUnitKind::G3c : CUnitKind::G4c, m, d, e, b};
    }
  } else {
    VertexId w = s.next_fresh();
    EdgeColor f1 = s.draw(c, w);
    if (f1 == Green) {
      u = {CUnitKind::G2c, b, c, a, w};
    } else {
      EdgeColor f2 = s.draw(a, w);
      u = f2 == Green ? CUnitHandle{CUnitKind::G6c, a, b, w, c}
                      : CUnitHandle{CUnitKind::G5c, b, c, a, w};
    }
  }
  guard.require(u.kind == CUnitKind::G1c || u.kind == CUnitKind::G2c ? 3 : 4,
                "build_small_unit");
  validate_cunit(s.graph(), u);
  return u;
}

PathHandle join_paths(MoveSession& s, PathHandle pn, PathHandle pk, int variant) {
  RoundGuard guard(s);
  const ColoredGraph& g = s.graph();
  PathHandle out;
  switch (variant) {
    case 1: {
      pn = orient_good_front(g, pn);
      pk = orient_good_front(g, pk);
      if (s.draw(pk.front(), pn.back()) == Green) {
        out = cat({pn.v, pk.v});
      } else {
        s.draw_forced_green(pn.front(), pk.front());
        if (s.draw(pn.back(), pk.back()) == Green)
          out = cat({pn.v, reversed(pk).v});
        else
          out = cat({reversed(pk).v, pn.v});
      }
      guard.require(3, "join_paths(1)");
      validate_path(g, out, guard.used() == 1 ? PathClass::Good : PathClass::Better);
      break;
    }
    case 2: {
      pn = orient_good_front(g, pn);
      VertexId u2 = pn.back();
      if (s.draw(u2, pk.front()) == Green) {
        out = cat({pn.v, pk.v});
      } else if (s.draw(u2, pk.back()) == Green) {
        out = cat({pn.v, reversed(pk).v});
      } else {
        // u2 is better; connect the good front to the pk end whose probe
        // color opposes its own.
        EdgeColor cu = incident_rb_color(g, pn.front());
        bool to_front = col(g, u2, pk.front()) == opposite_rb(cu);
        VertexId vx = to_front ? pk.front() : pk.back();
        s.draw_forced_green(pn.front(), vx);
        out = cat({reversed(pn).v, to_front ? pk.v : reversed(pk).v});
      }
      guard.require(3, "join_paths(2)");
      validate_path(g, out, guard.used() <= 2 ? PathClass::Good : PathClass::Better);
      break;
    }
    case 3: {
      if (pn.size() < 3) throw StrategyFault("join_paths(3) needs n >= 3");
      pn = better_back(g, pn);
      if (s.draw(pn.front(), pk.front()) != Green) {
        s.draw_forced_green(pn.front(), pk.back());
        out = cat({reversed(pn).v, reversed(pk).v});
      } else if (s.draw(pk.back(), pn.v[1]) == Green) {
        out = cat({slice(reversed(pn).v, 0, pn.v.size() - 1), reversed(pk).v,
                   seq({pn.front()})});
      } else {
        out = cat({reversed(pn).v, pk.v});
      }
      guard.require(2, "join_paths(3)");
      validate_path(g, out, PathClass::Better);
      break;
    }
    case 4: {
      if (pn.size() < 3) throw StrategyFault("join_paths(4) needs n >= 3");
      if (s.draw(pk.front(), pn.front()) == Green) {
        out = cat({reversed(pn).v, pk.v});
      } else if (s.draw(pn.front(), pk.back()) == Green) {
        out = cat({reversed(pn).v, reversed(pk).v});
      } else if (s.draw(pk.back(), pn.v[1]) == Green) {
        s.draw_forced_green(pn.front(), pn.back());
        out = cat({pk.v, slice(pn.v, 1, pn.v.size()), seq({pn.front()})});
      } else {
        s.draw_forced_green(pn.back(), pk.back());
        out = cat({pn.v, reversed(pk).v});
      }
      guard.require(4, "join_paths(4)");
      validate_path(g, out, guard.used() <= 1  ? PathClass::Bad
                            : guard.used() <= 2 ? PathClass::Good
                                                : PathClass::Better);
      break;
    }
    default:
      throw StrategyFault("join_paths: variant must be 1..4");
  }
  if (out.size() != pn.size() + pk.size()) throw StrategyFault("join_paths: wrong length");
  return out;
}

PathHandle absorb_crb(MoveSession& s, const CrbHandle& crb, PathHandle pn) {
  RoundGuard guard(s);
  const ColoredGraph& g = s.graph();
  if (col(g, crb.spine.front(), crb.apex) != Red || col(g, crb.spine.back(), crb.apex) != Blue)
    throw StrategyFault("absorb_crb: handle orientation broken");

  bool good = path_class(g, pn) >= PathClass::Good;
  PathHandle out;
  if (good) {
    pn = orient_good_front(g, pn);
    EdgeColor cu = incident_rb_color(g, pn.front());
    if (cu == Red) {
      // Pair the red-incident path end with the blue side of the cycle.
      s.draw_forced_green(pn.front(), crb.spine.back());
      s.draw_forced_green(pn.back(), crb.apex);
      out = cat({seq({crb.apex}), reversed(pn).v,
                 {crb.spine.rbegin(), crb.spine.rend()}});
    } else {
      s.draw_forced_green(pn.front(), crb.spine.front());
      s.draw_forced_green(pn.back(), crb.apex);
      out = cat({seq({crb.apex}), reversed(pn).v, crb.spine});
    }
    guard.require(2, "absorb_crb(good)");
  } else {
    if (s.draw(crb.spine.front(), pn.front()) == Green) {
      s.draw_forced_green(pn.back(), crb.apex);
      out = cat({seq({crb.apex}), reversed(pn).v, crb.spine});
    } else {
      s.draw_forced_green(crb.spine.front(), pn.back());
      s.draw_forced_green(pn.front(), crb.apex);
      out = cat({seq({crb.apex}), pn.v, crb.spine});
    }
    guard.require(3, "absorb_crb");
  }
  validate_path(g, out, PathClass::Better);
  if (out.size() != pn.size() + static_cast<int>(crb.spine.size()) + 1)
    throw StrategyFault("absorb_crb: wrong length");
  return out;
}

PathHandle g1c_absorb(MoveSession& s, const G1cHandle& u, PathHandle pn) {
  RoundGuard guard(s);
  const ColoredGraph& g = s.graph();
  bool good = path_class(g, pn) >= PathClass::Good;
  if (good) pn = orient_good_front(g, pn);

  // First probe runs toward the pendant matching the good end's color, so
  // that the follow-up toward the path is forced.
  EdgeColor cu = good ? incident_rb_color(g, pn.front()) : Red;
  VertexId same = cu == Red ? u.red_end : u.blue_end;
  VertexId other = cu == Red ? u.blue_end : u.red_end;

  PathHandle out;
  if (s.draw(u.green_end, same) == Green) {
    s.draw_forced_green(same, other);
    PathHandle better_p4{{other, same, u.green_end, u.center}};
    out = join_paths(s, better_p4, pn, 3);
  } else if (good) {
    s.draw_forced_green(other, same);
    s.draw_forced_green(other, pn.front());
    s.draw_forced_green(u.center, pn.back());
    out = cat({seq({same, other}), pn.v, seq({u.center, u.green_end})});
  } else {
    VertexId x = pn.front(), y = pn.back();
    bool fwd = s.draw(other, x) == Green;
    if (!fwd) s.draw_forced_green(other, y);
    s.draw_forced_green(other, same);
    s.draw_forced_green(u.center, fwd ? y : x);
    out = cat({seq({same, other}), fwd ? pn.v : reversed(pn).v,
               seq({u.center, u.green_end})});
  }
  guard.require(good ? 4 : 5, "g1c_absorb");
  validate_path(g, out, PathClass::Better);
  return out;
}

namespace {

// The green P4 inside G2c/G3c/G6c, oriented with the v3 end last.
PathHandle cunit_green_p4(const CUnitHandle& u) {
  switch (u.kind) {
    case CUnitKind::G2c: return {{u.v4, u.v2, u.v1, u.v3}};
    case CUnitKind::G3c: return {{u.v2, u.v4, u.v1, u.v3}};
    case CUnitKind::G6c: return {{u.v4, u.v2, u.v1, u.v3}};
    default: throw StrategyFault("cunit_green_p4: unit has no green P4");
  }
}

// G5c seen as a C^RB_4: apex v4, green spine through v1 oriented red-first.
CrbHandle crb_of_g5c(const ColoredGraph& g, const CUnitHandle& u) {
  if (col(g, u.v2, u.v4) == Red) return {{u.v2, u.v1, u.v3}, u.v4};
  return {{u.v3, u.v1, u.v2}, u.v4};
}

// Closing v2v3 in G4c is forced and upgrades it to a better P4.
PathHandle g4c_to_better_p4(MoveSession& s, const CUnitHandle& u) {
  s.draw_forced_green(u.v2, u.v3);
  return {{u.v1, u.v4, u.v2, u.v3}};
}

}  // namespace

P8Variant build_p8_variant(MoveSession& s) {
  RoundGuard guard(s);
  CUnitHandle a = build_small_unit(s);
  CUnitHandle b = build_small_unit(s);
  if (static_cast<int>(a.kind) > static_cast<int>(b.kind)) std::swap(a, b);
  const ColoredGraph& g = s.graph();

  P8Variant out{};
  auto finish = [&](PathHandle p) {
    PathClass c = path_class(g, p);
    out.kind = c >= PathClass::Better ? P8Variant::Kind::Better
               : c == PathClass::Good ? P8Variant::Kind::Good
                                      : P8Variant::Kind::Green;
    guard.require(out.kind == P8Variant::Kind::Better ? 11
                  : out.kind == P8Variant::Kind::Good ? 9
                                                      : 7,
                  "build_p8_variant");
    validate_path(g, p);
    if (p.size() != 8) throw StrategyFault("build_p8_variant: wrong length");
    out.path = std::move(p);
  };

  using K = CUnitKind;
  if (a.kind == K::G1c) {
    G1cHandle ga{a.v1, a.v2, a.v3, a.v4};
    switch (b.kind) {
      case K::G1c:
        out.kind = P8Variant::Kind::DoubleG1;
        out.g1a = ga;
        out.g1b = {b.v1, b.v2, b.v3, b.v4};
        guard.require(6, "build_p8_variant");
        return out;
      case K::G2c:
      case K::G3c:
      case K::G6c:
        finish(g1c_absorb(s, ga, cunit_green_p4(b)));
        return out;
      case K::G4c: {
        if (col(g, b.v1, b.v3) == Blue) {
          s.draw_forced_green(a.v2, a.v3);
          s.draw_forced_green(b.v2, b.v3);
          s.draw_forced_green(a.v3, b.v1);
          s.draw_forced_green(b.v3, a.v1);
          finish({{a.v4, a.v1, b.v3, b.v2, b.v4, b.v1, a.v3, a.v2}});
        } else {
          s.draw_forced_green(a.v2, a.v3);
          s.draw_forced_green(b.v2, b.v3);
          s.draw_forced_green(a.v2, b.v1);
          s.draw_forced_green(b.v3, a.v1);
          finish({{a.v4, a.v1, b.v3, b.v2, b.v4, b.v1, a.v2, a.v3}});
        }
        return out;
      }
      case K::G5c: {
        bool v2_blue = col(g, b.v2, b.v4) == Blue;
        VertexId t = v2_blue ? b.v2 : b.v3;
        VertexId t_other = v2_blue ? b.v3 : b.v2;
        s.draw_forced_green(a.v3, t);
        s.draw_forced_green(a.v3, a.v2);
        s.draw_forced_green(a.v2, b.v4);
        s.draw_forced_green(b.v4, a.v1);
        finish({{a.v4, a.v1, b.v4, a.v2, a.v3, t, b.v1, t_other}});
        return out;
      }
    }
  }
  if (a.kind == K::G2c) {
    switch (b.kind) {
      case K::G2c: finish(join_paths(s, cunit_green_p4(a), cunit_green_p4(b), 4)); return out;
      case K::G3c: finish(join_paths(s, cunit_green_p4(b), cunit_green_p4(a), 2)); return out;
      case K::G4c: {
        s.draw_forced_green(b.v2, b.v3);
        s.draw_forced_green(b.v3, a.v3);
        finish({{a.v4, a.v2, a.v1, a.v3, b.v3, b.v2, b.v4, b.v1}});
        return out;
      }
      case K::G5c: finish(absorb_crb(s, crb_of_g5c(g, b), cunit_green_p4(a))); return out;
      case K::G6c: finish(join_paths(s, cunit_green_p4(b), cunit_green_p4(a), 2)); return out;
      default: break;
    }
  }
  if (a.kind == K::G3c) {
    switch (b.kind) {
      case K::G3c: finish(join_paths(s, cunit_green_p4(a), cunit_green_p4(b), 1)); return out;
      case K::G4c: finish(join_paths(s, g4c_to_better_p4(s, b), cunit_green_p4(a), 3)); return out;
      case K::G5c: finish(absorb_crb(s, crb_of_g5c(g, b), cunit_green_p4(a))); return out;
      case K::G6c: finish(join_paths(s, cunit_green_p4(a), cunit_green_p4(b), 1)); return out;
      default: break;
    }
  }
  if (a.kind == K::G4c) {
    switch (b.kind) {
      case K::G4c: {
        s.draw_forced_green(a.v2, a.v3);
        s.draw_forced_green(b.v2, b.v3);
        s.draw_forced_green(a.v1, b.v3);
        finish({{b.v1, b.v4, b.v2, b.v3, a.v1, a.v4, a.v2, a.v3}});
        return out;
      }
      case K::G5c: finish(absorb_crb(s, crb_of_g5c(g, b), g4c_to_better_p4(s, a))); return out;
      case K::G6c: finish(join_paths(s, g4c_to_better_p4(s, a), cunit_green_p4(b), 3)); return out;
      default: break;
    }
  }
  if (a.kind == K::G5c) {
    if (b.kind == K::G5c) {
      EdgeColor a2 = col(g, a.v2, a.v4);
      bool to_v2 = col(g, b.v2, b.v4) != a2;
      VertexId t = to_v2 ? b.v2 : b.v3;
      VertexId t_other = to_v2 ? b.v3 : b.v2;
      s.draw_forced_green(a.v2, t);
      s.draw_forced_green(a.v3, b.v4);
      s.draw_forced_green(a.v4, t_other);
      finish({{a.v4, t_other, b.v1, t, a.v2, a.v1, a.v3, b.v4}});
      return out;
    }
    // (G5c, G6c)
    finish(absorb_crb(s, crb_of_g5c(g, a), cunit_green_p4(b)));
    return out;
  }
  // (G6c, G6c)
  finish(join_paths(s, cunit_green_p4(a), cunit_green_p4(b), 1));
  return out;
}

PathHandle double_g1_to_better_p8(MoveSession& s, const G1cHandle& a, const G1cHandle& b,
                                  EdgeColor good_end_color) {
  RoundGuard guard(s);
  // With pref = blue the roles below match the colors literally; for red the
  // two pendant roles swap throughout.
  VertexId a_same = good_end_color == Blue ? a.red_end : a.blue_end;
  VertexId a_opp = good_end_color == Blue ? a.blue_end : a.red_end;
  VertexId b_same = good_end_color == Blue ? b.red_end : b.blue_end;
  VertexId b_opp = good_end_color == Blue ? b.blue_end : b.red_end;

  PathHandle out;
  if (s.draw(a_same, a.green_end) == Green) {
    s.draw_forced_green(a_same, a_opp);
    s.draw_forced_green(a_opp, b_same);
    s.draw_forced_green(b_same, b_opp);
    s.draw_forced_green(a.center, b.green_end);
    out.v = {b.center, b.green_end, a.center, a.green_end, a_same, a_opp, b_same, b_opp};
  } else {
    s.draw_forced_green(a_same, b_opp);
    s.draw_forced_green(b_opp, b_same);
    s.draw_forced_green(b_same, a_opp);
    s.draw_forced_green(a_opp, b.center);
    s.draw_forced_green(a.center, b.green_end);
    out.v = {a_same, b_opp, b_same, a_opp, b.center, b.green_end, a.center, a.green_end};
  }
  guard.require(6, "double_g1_to_better_p8");
  validate_path(s.graph(), out, PathClass::Better);
  if (incident_rb_color(s.graph(), out.back()) != good_end_color)
    throw StrategyFault("double_g1_to_better_p8: wrong good-end color");
  return out;
}

PathHandle double_g1_to_good_p8(MoveSession& s, const G1cHandle& a, const G1cHandle& b,
                                EdgeColor good_end_color) {
  RoundGuard guard(s);
  VertexId a_same = good_end_color == Red ? a.red_end : a.blue_end;
  VertexId a_opp = good_end_color == Red ? a.blue_end : a.red_end;
  VertexId b_same = good_end_color == Red ? b.red_end : b.blue_end;
  VertexId b_opp = good_end_color == Red ? b.blue_end : b.red_end;

  s.draw_forced_green(a_same, b_opp);
  s.draw_forced_green(b_opp, b_same);
  s.draw_forced_green(b_same, a_opp);
  s.draw_forced_green(a_opp, b.center);
  s.draw_forced_green(b.green_end, a.center);
  PathHandle out{{a_same, b_opp, b_same, a_opp, b.center, b.green_end, a.center, a.green_end}};
  guard.require(5, "double_g1_to_good_p8");
  validate_path(s.graph(), out, PathClass::Good);
  return out;
}

PathHandle extend_better_one(MoveSession& s, PathHandle p) {
  RoundGuard guard(s);
  if (p.size() < 3) throw StrategyFault("extend_better_one needs n >= 3");
  const ColoredGraph& g = s.graph();
  p = better_back(g, p);
  validate_path(g, p, PathClass::Better);

  VertexId w = s.next_fresh();
  PathHandle out;
  if (s.draw(w, p.front()) != Green) {
    s.draw_forced_green(w, p.back());
    out = cat({seq({w}), reversed(p).v});
  } else if (s.draw(w, p.v[1]) != Green) {
    out = cat({seq({w}), p.v});
  } else {
    out = cat({seq({p.front(), w}), slice(p.v, 1, p.v.size())});
  }
  guard.require(2, "extend_better_one");
  validate_path(g, out, PathClass::Better);
  return out;
}

P9Variant build_p9_variant(MoveSession& s) {
  RoundGuard guard(s);
  P8Variant p8 = build_p8_variant(s);
  const ColoredGraph& g = s.graph();

  P9Variant out{};
  auto finish = [&](PathHandle p) {
    PathClass c = path_class(g, p);
    out.kind = c == PathClass::Best      ? P9Variant::Kind::Best
               : c >= PathClass::Better ? P9Variant::Kind::Better
                                        : P9Variant::Kind::Green;
    guard.require(out.kind == P9Variant::Kind::Best      ? 14
                  : out.kind == P9Variant::Kind::Better ? 13
                                                        : 10,
                  "build_p9_variant");
    validate_path(g, p);
    if (p.size() != 9) throw StrategyFault("build_p9_variant: wrong length");
    out.path = std::move(p);
  };

  switch (p8.kind) {
    case P8Variant::Kind::DoubleG1: {
      const G1cHandle &a = p8.g1a, &b = p8.g1b;
      if (s.draw(a.red_end, a.green_end) == Green) {
        s.draw_forced_green(a.red_end, a.blue_end);
        s.draw_forced_green(a.blue_end, b.red_end);
        s.draw_forced_green(b.red_end, b.blue_end);
        s.draw_forced_green(a.center, b.green_end);
        PathHandle p{{b.center, b.green_end, a.center, a.green_end, a.red_end, a.blue_end,
                      b.red_end, b.blue_end}};
        finish(extend_better_one(s, p));
      } else if (s.draw(a.green_end, a.blue_end) == Green) {
        VertexId w = s.next_fresh();
        s.draw_forced_green(a.center, w);
        s.draw_forced_green(w, a.red_end);
        s.draw_forced_green(a.red_end, b.green_end);
        s.draw_forced_green(b.red_end, b.blue_end);
        s.draw_forced_green(a.blue_end, b.red_end);
        finish({{b.center, b.green_end, a.red_end, w, a.center, a.green_end, a.blue_end,
                 b.red_end, b.blue_end}});
      } else {
        s.draw_forced_green(b.green_end, a.blue_end);
        s.draw_forced_green(a.blue_end, b.red_end);
        s.draw_forced_green(b.red_end, b.blue_end);
        s.draw_forced_green(b.blue_end, a.red_end);
        VertexId w = s.next_fresh();
        s.draw_forced_green(a.red_end, w);
        s.draw_forced_green(w, a.center);
        finish({{b.center, b.green_end, a.blue_end, b.red_end, b.blue_end, a.red_end, w,
                 a.center, a.green_end}});
      }
      break;
    }
    case P8Variant::Kind::Green: {
      PathHandle p = p8.path;
      VertexId v9 = s.next_fresh();
      if (s.draw(p.front(), v9) == Green) {
        finish(cat({seq({v9}), p.v}));
      } else if (s.draw(p.back(), v9) == Green) {
        finish(cat({p.v, seq({v9})}));
      } else {
        s.draw_forced_green(p.front(), p.back());
        s.draw_forced_green(p.v[p.v.size() - 2], v9);
        finish(cat({seq({p.back()}), slice(p.v, 0, p.v.size() - 1), seq({v9})}));
      }
      break;
    }
    case P8Variant::Kind::Good: {
      PathHandle p = orient_good_back(g, p8.path);
      VertexId v9 = s.next_fresh();
      if (s.draw(p.back(), v9) == Green) {
        finish(cat({p.v, seq({v9})}));
      } else if (s.draw(p.front(), v9) == Green) {
        finish(cat({seq({v9}), p.v}));
      } else {
        s.draw_forced_green(p.front(), p.back());
        s.draw_forced_green(p.v[p.v.size() - 2], v9);
        finish(cat({seq({p.back()}), slice(p.v, 0, p.v.size() - 1), seq({v9})}));
      }
      break;
    }
    case P8Variant::Kind::Better:
      finish(extend_better_one(s, p8.path));
      break;
  }
  return out;
}

HUnit build_h_family(MoveSession& s) {
  RoundGuard guard(s);
  VertexId a = s.next_fresh();
  VertexId b = a + 1;
  EdgeColor c1 = s.draw(a, b);
  VertexId c = s.next_fresh();
  EdgeColor c2 = s.draw(b, c);

  HUnit h{};
  if (c1 == Green && c2 == Green) {
    h = {1, {a, b, c}};
  } else if (c1 != Green && c2 != Green) {
    s.draw_forced_green(a, c);
    h = {2, {c1 == Red ? a : c, c1 == Red ? c : a, b}};
  } else {
    VertexId m = c1 == Green ? a : c;
    VertexId e = c1 == Green ? c : a;
    EdgeColor hcol = c1 == Green ? c2 : c1;
    if (s.draw(a, c) == Green) {
      h = {3, {b, e, m}};
    } else {
      // The closing edge opposes (b,e) at e, making e the apex of a C^RB_3.
      h = {2, {hcol == Red ? b : m, hcol == Red ? m : b, e}};
    }
  }
  guard.require(h.kind == 1 ? 2 : 3, "build_h_family");
  return h;
}

namespace {

PathHandle h1_path(const HUnit& h) { return {{h.v[0], h.v[1], h.v[2]}}; }
PathHandle h3_path(const HUnit& h) { return {{h.v[0], h.v[2], h.v[1]}}; }
CrbHandle crb_of_h2(const HUnit& h) { return {{h.v[0], h.v[1]}, h.v[2]}; }

}  // namespace

P6Variant build_p6_variant(MoveSession& s) {
  RoundGuard guard(s);
  HUnit a = build_h_family(s);
  HUnit b = build_h_family(s);
  if (a.kind > b.kind) std::swap(a, b);
  const ColoredGraph& g = s.graph();

  P6Variant out{};
  auto finish = [&](PathHandle p) {
    PathClass c = path_class(g, p);
    out.kind = c == PathClass::Best      ? P6Variant::Kind::Best
               : c >= PathClass::Better ? P6Variant::Kind::Better
               : c == PathClass::Good   ? P6Variant::Kind::Good
                                        : P6Variant::Kind::Green;
    guard.require(out.kind == P6Variant::Kind::Best      ? 9
                  : out.kind == P6Variant::Kind::Better ? 8
                  : out.kind == P6Variant::Kind::Good   ? 6
                                                        : 5,
                  "build_p6_variant");
    validate_path(g, p);
    if (p.size() != 6) throw StrategyFault("build_p6_variant: wrong length");
    out.path = std::move(p);
  };

  if (a.kind == 1 && b.kind == 1) {
    finish(join_paths(s, h1_path(a), h1_path(b), 4));
  } else if (a.kind == 1 && b.kind == 2) {
    finish(absorb_crb(s, crb_of_h2(b), h1_path(a)));
  } else if (a.kind == 1 && b.kind == 3) {
    if (s.draw(a.v[2], b.v[0]) == Green) {
      finish({{a.v[0], a.v[1], a.v[2], b.v[0], b.v[2], b.v[1]}});
    } else if (s.draw(a.v[0], b.v[1]) == Green) {
      finish({{a.v[2], a.v[1], a.v[0], b.v[1], b.v[2], b.v[0]}});
    } else {
      s.draw_forced_green(a.v[2], b.v[1]);
      finish({{b.v[0], b.v[2], b.v[1], a.v[2], a.v[1], a.v[0]}});
    }
  } else if (a.kind == 2 && b.kind == 2) {
    s.draw_forced_green(a.v[1], b.v[0]);
    s.draw_forced_green(a.v[0], b.v[2]);
    s.draw_forced_green(a.v[2], b.v[1]);
    finish({{a.v[2], b.v[1], b.v[0], a.v[1], a.v[0], b.v[2]}});
  } else if (a.kind == 2 && b.kind == 3) {
    finish(absorb_crb(s, crb_of_h2(a), h3_path(b)));
  } else {
    // (3,3): probe between the two non-green pairs.
    if (s.draw(b.v[1], a.v[0]) == Green) {
      out.kind = P6Variant::Kind::Hgraph;
      out.h = {{b.v[0], b.v[2], b.v[1], a.v[0], a.v[2], a.v[1]}};
      guard.require(7, "build_p6_variant");
    } else {
      s.draw_forced_green(b.v[0], a.v[0]);
      finish({{b.v[1], b.v[2], b.v[0], a.v[0], a.v[2], a.v[1]}});
    }
  }
  return out;
}

void close_cycle(MoveSession& s, PathHandle p) {
  RoundGuard guard(s);
  const ColoredGraph& g = s.graph();
  int k = p.size();
  if (k < 6) throw StrategyFault("close_cycle needs k >= 6");
  if (g.has_edge(p.front(), p.back()))
    throw StrategyFault("close_cycle: endpoints already joined");

  bool good = path_class(g, p) >= PathClass::Good;
  if (good) {
    p = orient_good_front(g, p);
    s.draw(p.v[0], p.v[k - 1]);  // green completes the cycle
    if (s.draw(p.v[2], p.v[k - 1]) == Green) {
      s.draw_forced_green(p.v[0], p.v[3]);  // completes
    } else {
      s.draw_forced_green(p.v[0], p.v[2]);
      s.draw_forced_green(p.v[1], p.v[k - 1]);  // completes
    }
    guard.require(4, "close_cycle(good)");
  } else {
    s.draw(p.v[0], p.v[k - 1]);
    if (s.draw(p.v[0], p.v[3]) != Green) {
      s.draw_forced_green(p.v[0], p.v[4]);
      s.draw_forced_green(p.v[3], p.v[k - 1]);  // completes
    } else {
      s.draw(p.v[2], p.v[k - 1]);  // green completes
      s.draw_forced_green(p.v[0], p.v[2]);
      s.draw_forced_green(p.v[1], p.v[k - 1]);  // completes
    }
    guard.require(5, "close_cycle");
  }
  throw StrategyFault("close_cycle: the closing edge did not end the game");
}

void connect_cycle(MoveSession& s, PathHandle pn, PathHandle pk, int variant) {
  RoundGuard guard(s);
  const ColoredGraph& g = s.graph();
  if (pn.size() < 3 || pk.size() < 3) throw StrategyFault("connect_cycle needs n,k >= 3");

  switch (variant) {
    case 1: {
      pn = orient_good_back(g, pn);
      pk = orient_good_back(g, pk);
      if (s.draw(pk.front(), pn.back()) == Green) {
        close_cycle(s, cat({pn.v, pk.v}));
      }
      if (s.draw(pk.front(), pn.front()) == Green) {
        s.draw_forced_green(pn.back(), pk.back());  // completes
      } else {
        s.draw_forced_green(pn.front(), pn.back());
        s.draw_forced_green(pk.front(), pn.v[pn.v.size() - 2]);
        s.draw_forced_green(pk.back(), pn.back());  // completes
      }
      break;
    }
    case 2: {
      pn = orient_good_back(g, pn);
      if (s.draw(pk.front(), pn.back()) == Green) {
        close_cycle(s, cat({pn.v, pk.v}));
      } else {
        s.draw_forced_green(pk.back(), pn.back());
        close_cycle(s, cat({pn.v, reversed(pk).v}));
      }
      break;
    }
    case 3: {
      if (s.draw(pk.front(), pn.back()) == Green) close_cycle(s, cat({pn.v, pk.v}));
      if (s.draw(pk.front(), pn.front()) == Green)
        close_cycle(s, cat({reversed(pn).v, pk.v}));
      if (s.draw(pn.back(), pk.back()) == Green) {
        s.draw_forced_green(pn.front(), pn.back());
        s.draw_forced_green(pk.front(), pn.v[pn.v.size() - 2]);  // completes
      } else {
        s.draw_forced_green(pk.front(), pk.back());
        s.draw_forced_green(pn.front(), pn.back());
        s.draw_forced_green(pk.front(), pn.v[pn.v.size() - 2]);
        s.draw_forced_green(pn.back(), pk.v[1]);  // completes
      }
      break;
    }
    case 4: {
      pn = reversed(better_back(g, pn));
      // better end in front, good end at the back
      if (s.draw(pn.back(), pk.back()) == Green) {
        s.draw_forced_green(pn.front(), pk.front());  // completes
      } else {
        s.draw_forced_green(pn.back(), pk.front());
        s.draw_forced_green(pn.front(), pk.back());  // completes
      }
      break;
    }
    default:
      throw StrategyFault("connect_cycle: variant must be 1..4");
  }
  throw StrategyFault("connect_cycle: the closing edge did not end the game");
}

void h_close_cycle(MoveSession& s, const HGraph& h, PathHandle p) {
  RoundGuard guard(s);
  EdgeColor c1 = s.draw(p.front(), h.spine[5]);
  EdgeColor c2 = s.draw(p.back(), h.spine[0]);  // completes when both are green
  if (c1 == Green) {
    s.draw_forced_green(p.back(), h.spine[2]);
    s.draw_forced_green(h.spine[0], h.spine[3]);  // completes
  } else if (c2 == Green) {
    s.draw_forced_green(p.front(), h.spine[3]);
    s.draw_forced_green(h.spine[5], h.spine[2]);  // completes
  } else {
    s.draw_forced_green(p.front(), h.spine[0]);
    s.draw_forced_green(p.back(), h.spine[5]);  // completes
  }
  throw StrategyFault("h_close_cycle: the closing edge did not end the game");
}

PathHandle build_p4k_minus5(MoveSession& s, int k) {
  if (k < 4) throw StrategyFault("build_p4k_minus5 needs k >= 4");
  RoundGuard guard(s);
  PathHandle longp = grow_green_path(s, 4 * k - 8);
  const ColoredGraph& g = s.graph();
  bool lgood = path_class(g, longp) >= PathClass::Good;
  HUnit h = build_h_family(s);

  PathHandle out;
  if (h.kind == 1) {
    out = join_paths(s, longp, h1_path(h), lgood ? 2 : 4);
  } else if (h.kind == 2) {
    out = absorb_crb(s, crb_of_h2(h), longp);
  } else if (!lgood) {
    out = join_paths(s, h3_path(h), longp, 2);
  } else {
    longp = orient_good_front(g, longp);
    if (s.draw(longp.back(), h.v[0]) == Green) {
      out = cat({longp.v, seq({h.v[0], h.v[2], h.v[1]})});
    } else {
      s.draw_forced_green(longp.back(), h.v[1]);
      out = cat({longp.v, seq({h.v[1], h.v[2], h.v[0]})});
    }
  }
  PathClass c = path_class(g, out);
  guard.require(c >= PathClass::Better ? 6 * k - 8 : c == PathClass::Good ? 6 * k - 9
                                                                          : 6 * k - 11,
                "build_p4k_minus5");
  validate_path(g, out);
  if (out.size() != 4 * k - 5) throw StrategyFault("build_p4k_minus5: wrong length");
  return out;
}

namespace {

// Both endpoints of `best` are better vertices: two forced edges close the
// combined cycle.
void close_best_with(MoveSession& s, const PathHandle& best, const PathHandle& other) {
  s.draw_forced_green(best.front(), other.front());
  s.draw_forced_green(best.back(), other.back());  // completes
  throw StrategyFault("best-path closure did not end the game");
}

// Two better paths, closed by pairing each better end with the other path's
// good end.
void close_better_pair(MoveSession& s, PathHandle a, PathHandle b) {
  const ColoredGraph& g = s.graph();
  a = better_back(g, a);
  b = better_back(g, b);
  s.draw_forced_green(a.front(), b.back());
  s.draw_forced_green(b.front(), a.back());  // completes
  throw StrategyFault("better-pair closure did not end the game");
}

}  // namespace

void force_green_cycle(MoveSession& s, int len) {
  if (len < 16) throw StrategyFault("force_green_cycle needs len >= 16");
  const ColoredGraph& g = s.graph();
  int r = len % 4;

  if (r == 3) {
    int k = (len - 3) / 4;
    PathHandle longp = build_p4k_minus5(s, k);
    PathClass lc = path_class(g, longp);
    P8Variant p8 = build_p8_variant(s);
    s.mark("connect");
    if (lc >= PathClass::Better) {
      longp = better_back(g, longp);  // good end in front, better end at back
      VertexId x = longp.front(), y = longp.back();
      switch (p8.kind) {
        case P8Variant::Kind::Green:
        case P8Variant::Kind::Good:
          connect_cycle(s, longp, p8.path, 4);
        case P8Variant::Kind::Better:
          close_better_pair(s, longp, p8.path);
        case P8Variant::Kind::DoubleG1: {
          EdgeColor xc = incident_rb_color(g, x);
          PathHandle g8 = double_g1_to_good_p8(s, p8.g1a, p8.g1b, opposite_rb(xc));
          s.draw_forced_green(x, g8.front());
          s.draw_forced_green(y, g8.back());  // completes
          throw StrategyFault("colored closure did not end the game");
        }
      }
    } else if (lc == PathClass::Good) {
      longp = orient_good_front(g, longp);
      switch (p8.kind) {
        case P8Variant::Kind::Green: connect_cycle(s, longp, p8.path, 2);
        case P8Variant::Kind::Good: connect_cycle(s, longp, p8.path, 1);
        case P8Variant::Kind::Better: connect_cycle(s, p8.path, longp, 4);
        case P8Variant::Kind::DoubleG1: {
          VertexId x = longp.front();
          EdgeColor xc = incident_rb_color(g, x);
          PathHandle b8 = double_g1_to_better_p8(s, p8.g1a, p8.g1b, opposite_rb(xc));
          s.draw_forced_green(x, b8.back());
          s.draw_forced_green(longp.back(), b8.front());  // completes
          throw StrategyFault("colored closure did not end the game");
        }
      }
    } else {
      switch (p8.kind) {
        case P8Variant::Kind::Green: connect_cycle(s, longp, p8.path, 3);
        case P8Variant::Kind::Good: connect_cycle(s, p8.path, longp, 2);
        case P8Variant::Kind::Better: connect_cycle(s, p8.path, longp, 4);
        case P8Variant::Kind::DoubleG1: {
          PathHandle b8 = double_g1_to_better_p8(s, p8.g1a, p8.g1b, Blue);
          connect_cycle(s, b8, longp, 4);
        }
      }
    }
    throw StrategyFault("force_green_cycle: dispatch fell through");
  }

  int k = r == 0 ? len / 4 : r == 1 ? (len - 1) / 4 : (len + 2) / 4;
  PathHandle longp = grow_green_path(s, 4 * k - 8);
  bool lgood = path_class(g, longp) >= PathClass::Good;
  if (lgood) longp = orient_good_front(g, longp);

  if (r == 0) {
    P8Variant p8 = build_p8_variant(s);
    s.mark("connect");
    switch (p8.kind) {
      case P8Variant::Kind::Green:
        connect_cycle(s, longp, p8.path, lgood ? 2 : 3);
      case P8Variant::Kind::Good:
        if (lgood) connect_cycle(s, longp, p8.path, 1);
        connect_cycle(s, p8.path, longp, 2);
      case P8Variant::Kind::Better:
        connect_cycle(s, p8.path, longp, 4);
      case P8Variant::Kind::DoubleG1: {
        if (lgood) {
          VertexId x = longp.front();
          EdgeColor xc = incident_rb_color(g, x);
          PathHandle b8 = double_g1_to_better_p8(s, p8.g1a, p8.g1b, opposite_rb(xc));
          s.draw_forced_green(x, b8.back());
          s.draw_forced_green(longp.back(), b8.front());  // completes
          throw StrategyFault("colored closure did not end the game");
        }
        PathHandle b8 = double_g1_to_better_p8(s, p8.g1a, p8.g1b, Blue);
        connect_cycle(s, b8, longp, 4);
      }
    }
  } else if (r == 1) {
    P9Variant p9 = build_p9_variant(s);
    s.mark("connect");
    switch (p9.kind) {
      case P9Variant::Kind::Green:
        if (lgood) connect_cycle(s, longp, p9.path, 2);
        connect_cycle(s, longp, p9.path, 3);
      case P9Variant::Kind::Better:
        connect_cycle(s, p9.path, longp, 4);
      case P9Variant::Kind::Best:
        close_best_with(s, p9.path, longp);
    }
  } else {
    P6Variant p6 = build_p6_variant(s);
    s.mark("connect");
    switch (p6.kind) {
      case P6Variant::Kind::Green:
        connect_cycle(s, longp, p6.path, lgood ? 2 : 3);
      case P6Variant::Kind::Good:
        if (lgood) connect_cycle(s, longp, p6.path, 1);
        connect_cycle(s, p6.path, longp, 2);
      case P6Variant::Kind::Better:
        connect_cycle(s, p6.path, longp, 4);
      case P6Variant::Kind::Best:
        close_best_with(s, p6.path, longp);
      case P6Variant::Kind::Hgraph:
        h_close_cycle(s, p6.h, longp);
    }
  }
  throw StrategyFault("force_green_cycle: dispatch fell through");
}

BuilderProgram paper_cycle_builder(int len) {
  return [len](MoveSession& s) { force_green_cycle(s, len); };
}

}  // namespace oramsey
