#include "oramsey/builder_common.hpp"

namespace oramsey {

PathHandle cat(std::initializer_list<std::vector<VertexId>> pieces) {
  PathHandle out;
  for (const auto& p : pieces) out.v.insert(out.v.end(), p.begin(), p.end());
  return out;
}

PathClass path_class(const ColoredGraph& g, const PathHandle& p) {
  return classify_green_path(g, p.v);
}

void validate_path(const ColoredGraph& g, const PathHandle& p, PathClass promised) {
  PathClass c;
  try {
    c = classify_green_path(g, p.v);
  } catch (const NotAGreenPathError&) {
    throw StrategyFault("handle re-validation failed: not a green path");
  }
  if (c < promised) throw StrategyFault("handle re-validation failed: path class below promise");
}

PathHandle orient_good_front(const ColoredGraph& g, PathHandle p) {
  if (classify_vertex(g, p.front()) == VertexClass::Plain &&
      classify_vertex(g, p.back()) != VertexClass::Plain)
    return reversed(p);
  return p;
}

PathHandle orient_good_back(const ColoredGraph& g, PathHandle p) {
  if (classify_vertex(g, p.back()) == VertexClass::Plain &&
      classify_vertex(g, p.front()) != VertexClass::Plain)
    return reversed(p);
  return p;
}

PathHandle orient_better_front(const ColoredGraph& g, PathHandle p) {
  if (classify_vertex(g, p.front()) != VertexClass::Better &&
      classify_vertex(g, p.back()) == VertexClass::Better)
    return reversed(p);
  return p;
}

EdgeColor incident_rb_color(const ColoredGraph& g, VertexId v) {
  if (g.color_degree(v, EdgeColor::Red) > 0) return EdgeColor::Red;
  if (g.color_degree(v, EdgeColor::Blue) > 0) return EdgeColor::Blue;
  throw StrategyFault("expected a red/blue edge at this vertex");
}

}  // namespace oramsey
