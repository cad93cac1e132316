#include "ditc/graph/planner.hpp"

#include "ditc/core/error.hpp"
#include "ditc/graph/ditc.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>

namespace ditc {

GraphRoutes::GraphRoutes(const DirectedGraph& g) : oracle_(g) {
  const int n = g.num_vertices();
  paths_.assign(n, std::vector<std::vector<EdgeId>>(n));
  for (VertexId s = 0; s < n; ++s) {
    std::vector<EdgeId> parent(n, -1);
    std::vector<char> seen(n, 0);
    seen[s] = 1;
    std::deque<VertexId> queue{s};
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop_front();
      for (EdgeId e : g.out_edges(v)) {
        const VertexId w = g.edge(e).dst;
        if (seen[w]) continue;
        seen[w] = 1;
        parent[w] = e;
        queue.push_back(w);
      }
    }
    for (VertexId t = 0; t < n; ++t) {
      if (!seen[t] || t == s) continue;
      auto& path = paths_[s][t];
      for (VertexId v = t; v != s; v = g.edge(parent[v]).src) path.push_back(parent[v]);
      std::reverse(path.begin(), path.end());
    }
  }
}

const std::vector<EdgeId>& GraphRoutes::vertex_path(VertexId from, VertexId to) const {
  if (!oracle_.reaches(from, to)) throw Error(ErrorCode::Unreachable, "vertex pair is not in Γ");
  return paths_[from][to];
}

DiPath GraphRoutes::route(const GraphPoint& x, const GraphPoint& y) const {
  if (!oracle_.contains(x, y)) throw Error(ErrorCode::Unreachable, "pair is not in Γ");
  if (same_point(x, y)) return DiPath::constant(x);
  const auto& g = graph();
  DiPath out = DiPath::constant(x);
  auto append_vertex_path = [&](VertexId a, VertexId b) {
    for (EdgeId e : vertex_path(a, b)) out.steps.push_back({e, 0.0, 1.0});
  };

  if (x.is_interior() && y.is_interior() && x.index == y.index && x.t < y.t) {
    out.steps.push_back({x.index, x.t, y.t});
    return out;
  }
  VertexId from = x.index;
  if (x.is_interior()) {
    out.steps.push_back({x.index, x.t, 1.0});
    from = g.edge(x.index).dst;
  }
  if (y.is_vertex()) {
    append_vertex_path(from, y.index);
  } else {
    append_vertex_path(from, g.edge(y.index).src);
    out.steps.push_back({y.index, 0.0, y.t});
  }
  return out;
}

namespace {

GraphPatchwork::PatchType make_patch(std::string id, std::shared_ptr<const GraphRoutes> routes,
                                     std::function<bool(const GraphPoint&, const GraphPoint&)> kind) {
  GraphPatchwork::PatchType patch;
  patch.id = std::move(id);
  patch.contains = [routes, kind](const GraphPoint& x, const GraphPoint& y) {
    return routes->oracle().contains(x, y) && kind(x, y);
  };
  patch.section = [routes](const GraphPoint& x, const GraphPoint& y) { return routes->route(x, y); };
  patch.lipschitz_bound = 1.0;
  return patch;
}

}  // namespace

GraphPatchwork three_patch_planner(const DirectedGraph& g) {
  auto routes = std::make_shared<const GraphRoutes>(g);
  GraphPatchwork pw;
  // interior diagonal pairs go with the vertex pairs: on an edge lying on a
  // cycle, the off-diagonal section jumps from a short run to a full loop as
  // the two points cross, so the diagonal must not share a patch with them
  pw.patches.push_back(make_patch("F1", routes, [](const GraphPoint& x, const GraphPoint& y) {
    return (x.is_vertex() && y.is_vertex()) || (x.is_interior() && same_point(x, y));
  }));
  pw.patches.push_back(make_patch("F2", routes, [](const GraphPoint& x, const GraphPoint& y) {
    return x.is_vertex() != y.is_vertex();
  }));
  pw.patches.push_back(make_patch("F3", routes, [](const GraphPoint& x, const GraphPoint& y) {
    return x.is_interior() && y.is_interior() && !same_point(x, y);
  }));
  pw.ordered_regular = false;
  return pw;
}

GraphPatchwork single_patch_planner(const DirectedGraph& g) {
  auto routes = std::make_shared<const GraphRoutes>(g);
  GraphPatchwork pw;
  pw.patches.push_back(make_patch("Gamma", routes, [](const GraphPoint&, const GraphPoint&) { return true; }));
  pw.ordered_regular = true;
  return pw;
}

GraphPatchwork conflict_two_patch_planner(const DirectedGraph& g,
                                          const std::vector<std::pair<VertexId, VertexId>>& conflicts) {
  auto routes = std::make_shared<const GraphRoutes>(g);
  auto in_d = std::make_shared<const std::set<std::pair<VertexId, VertexId>>>(conflicts.begin(), conflicts.end());
  auto member = [in_d](const GraphPoint& x, const GraphPoint& y) {
    return x.is_vertex() && y.is_vertex() && in_d->count({x.index, y.index}) > 0;
  };
  GraphPatchwork pw;
  pw.patches.push_back(make_patch("D", routes, member));
  pw.patches.push_back(make_patch("Gamma-D", routes,
                                  [member](const GraphPoint& x, const GraphPoint& y) { return !member(x, y); }));
  pw.ordered_regular = false;
  return pw;
}

namespace {

struct CycleLayout {
  DirectedGraph graph;
  std::vector<EdgeId> order;      // edges in cycle order
  std::vector<int> edge_slot;     // position of each edge in `order`
  std::vector<int> vertex_slot;   // vertex i sits at the start of order[vertex_slot]
};

CycleLayout layout_cycle(const DirectedGraph& g) {
  const int n = g.num_vertices();
  if (n == 0 || g.num_edges() != n || g.num_components() != 1)
    throw Error(ErrorCode::InvalidInput, "graph is not a single directed cycle");
  for (VertexId v = 0; v < n; ++v)
    if (g.out_edges(v).size() != 1) throw Error(ErrorCode::InvalidInput, "graph is not a single directed cycle");
  CycleLayout c{g, {}, std::vector<int>(n, -1), std::vector<int>(n, -1)};
  VertexId v = 0;
  for (int k = 0; k < n; ++k) {
    if (c.vertex_slot[v] >= 0) throw Error(ErrorCode::InvalidInput, "graph is not a single directed cycle");
    const EdgeId e = g.out_edges(v).front();
    c.vertex_slot[v] = k;
    c.edge_slot[e] = k;
    c.order.push_back(e);
    v = g.edge(e).dst;
  }
  if (v != 0) throw Error(ErrorCode::InvalidInput, "graph is not a single directed cycle");
  return c;
}

DiPath forward_around(const CycleLayout& c, const GraphPoint& x, const GraphPoint& y) {
  const int n = static_cast<int>(c.order.size());
  const int first = x.is_vertex() ? c.vertex_slot[x.index] : c.edge_slot[x.index];
  const double t0 = x.is_vertex() ? 0.0 : x.t;
  const int last = y.is_vertex() ? (c.vertex_slot[y.index] + n - 1) % n : c.edge_slot[y.index];
  const double t1 = y.is_vertex() ? 1.0 : y.t;

  DiPath out = DiPath::constant(x);
  if (first == last && t1 > t0) {
    out.steps.push_back({c.order[first], t0, t1});
    return out;
  }
  out.steps.push_back({c.order[first], t0, 1.0});
  for (int k = (first + 1) % n; k != last; k = (k + 1) % n) out.steps.push_back({c.order[k], 0.0, 1.0});
  out.steps.push_back({c.order[last], 0.0, t1});
  return out;
}

}  // namespace

GraphPatchwork cycle_planner(const DirectedGraph& g) {
  auto layout = std::make_shared<const CycleLayout>(layout_cycle(g));
  GraphPatchwork pw;
  GraphPatchwork::PatchType diagonal;
  diagonal.id = "diagonal";
  diagonal.contains = [](const GraphPoint& x, const GraphPoint& y) { return same_point(x, y); };
  diagonal.section = [](const GraphPoint& x, const GraphPoint&) { return DiPath::constant(x); };
  GraphPatchwork::PatchType off;
  off.id = "off-diagonal";
  off.contains = [](const GraphPoint& x, const GraphPoint& y) { return !same_point(x, y); };
  off.section = [layout](const GraphPoint& x, const GraphPoint& y) { return forward_around(*layout, x, y); };
  pw.patches.push_back(std::move(diagonal));
  pw.patches.push_back(std::move(off));
  pw.ordered_regular = true;
  return pw;
}

GraphPatchwork build_planner(const DirectedGraph& g) {
  if (g.num_vertices() == 0 || g.num_components() != 1)
    throw Error(ErrorCode::NotConnected, "planner construction needs a connected graph");
  return *ditc(g).patchwork;
}

}  // namespace ditc
