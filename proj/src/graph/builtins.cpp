#include "ditc/graph/builtins.hpp"

#include "ditc/core/error.hpp"
#include "ditc/graph/planner.hpp"

#include <string>

namespace ditc {

BuiltinGraph directed_interval() {
  DirectedGraph g;
  g.add_vertex("0");
  g.add_vertex("1");
  g.add_edge("e", "0", "1");
  return {g, single_patch_planner(g)};
}

namespace {

// closed arc along edge `arc` of the circle, as a parameter in [0,1]
bool arc_param(const DirectedGraph& g, EdgeId arc, const GraphPoint& p, double& t) {
  if (p.is_vertex()) {
    t = p.index == g.edge(arc).src ? 0.0 : 1.0;
    return true;
  }
  t = p.t;
  return p.index == arc;
}

GraphPatchwork::PatchType arc_patch(const DirectedGraph& g, const std::string& id, EdgeId arc, bool drop_vertex_pairs) {
  GraphPatchwork::PatchType patch;
  patch.id = id;
  patch.contains = [g, arc, drop_vertex_pairs](const GraphPoint& x, const GraphPoint& y) {
    if (drop_vertex_pairs && x.is_vertex() && y.is_vertex()) return false;
    double a = 0.0, b = 0.0;
    return arc_param(g, arc, x, a) && arc_param(g, arc, y, b) && a <= b + kParamTol;
  };
  patch.section = [g, arc](const GraphPoint& x, const GraphPoint& y) {
    double a = 0.0, b = 0.0;
    arc_param(g, arc, x, a);
    arc_param(g, arc, y, b);
    if (same_point(x, y)) return DiPath::constant(x);
    DiPath p = edge_run(g, arc, a, b);
    p.origin = x;
    return p;
  };
  return patch;
}

}  // namespace

BuiltinGraph directed_circle() {
  DirectedGraph g;
  g.add_vertex("b");
  g.add_vertex("e");
  const EdgeId top = g.add_edge("top", "b", "e");
  const EdgeId bottom = g.add_edge("bottom", "b", "e");
  GraphPatchwork pw;
  pw.patches.push_back(arc_patch(g, "I+", top, false));
  pw.patches.push_back(arc_patch(g, "I-", bottom, true));
  pw.ordered_regular = true;
  return {g, pw};
}

BuiltinGraph directed_loop() {
  DirectedGraph g;
  g.add_vertex("v");
  g.add_edge("l", "v", "v");
  return {g, cycle_planner(g)};
}

BuiltinGraph cycle_graph(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidInput, "cycle needs at least one vertex");
  DirectedGraph g;
  for (int i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i));
  for (int i = 0; i < n; ++i) g.add_edge("e" + std::to_string(i), i, (i + 1) % n);
  return {g, cycle_planner(g)};
}

BuiltinGraph parallel_edges(int k) {
  if (k < 1) throw Error(ErrorCode::InvalidInput, "need at least one edge");
  DirectedGraph g;
  g.add_vertex("b");
  g.add_vertex("e");
  for (int i = 0; i < k; ++i) g.add_edge("p" + std::to_string(i), "b", "e");
  return {g, build_planner(g)};
}

BuiltinGraph figure_eight() {
  DirectedGraph g;
  g.add_vertex("v");
  g.add_edge("a", "v", "v");
  g.add_edge("b", "v", "v");
  return {g, three_patch_planner(g)};
}

}  // namespace ditc
