#include "ditc/graph/ditc.hpp"

#include "ditc/core/error.hpp"
#include "ditc/graph/planner.hpp"
#include "ditc/graph/traces.hpp"

#include <algorithm>
#include <memory>

namespace ditc {

std::string_view to_string(DiTCReason reason) {
  switch (reason) {
    case DiTCReason::UniqueTraces: return "UniqueTraces";
    case DiTCReason::MultiClassLowerBound: return "MultiClassLowerBound";
    case DiTCReason::FiniteConflictTwoPatch: return "FiniteConflictTwoPatch";
    case DiTCReason::StronglyConnectedFormula: return "StronglyConnectedFormula";
    case DiTCReason::GeneralThreePatch: return "GeneralThreePatch";
    case DiTCReason::KnownBuiltin: return "KnownBuiltin";
  }
  return "Unknown";
}

nlohmann::json DiTCReport::to_json() const {
  return {{"lower", lower}, {"upper", upper}, {"exact", exact}, {"reason", std::string(to_string(reason))}};
}

ConflictAnalysis analyze_conflicts(const DirectedGraph& g) {
  // trace counts depend only on the cells, except for the order of two
  // points on the same edge, so two interior samples per edge cover all cases
  std::vector<GraphPoint> reps;
  for (VertexId v = 0; v < g.num_vertices(); ++v) reps.push_back(GraphPoint::vertex(v));
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    reps.push_back(GraphPoint::interior(e, 1.0 / 3.0));
    reps.push_back(GraphPoint::interior(e, 2.0 / 3.0));
  }
  const TraceCounter counter(g);
  ConflictAnalysis out;
  for (const auto& x : reps)
    for (const auto& y : reps) {
      if (!counter.between(x, y).multiple()) continue;
      out.any_multi_class = true;
      if (x.is_vertex() && y.is_vertex()) {
        out.vertex_conflicts.emplace_back(x.index, y.index);
      } else {
        out.only_vertex_pairs = false;
      }
    }
  return out;
}

namespace {

DiTCReport ditc_connected(const DirectedGraph& g) {
  DiTCReport report;
  const ConflictAnalysis conflicts = analyze_conflicts(g);
  if (!conflicts.any_multi_class) {
    report.lower = report.upper = 1;
    report.reason = DiTCReason::UniqueTraces;
    report.patchwork = single_patch_planner(g);
  } else if (is_strongly_connected_dspace(g)) {
    const int b1 = betti1(g);
    report.lower = report.upper = std::min(b1, 2) + 1;
    report.reason = DiTCReason::StronglyConnectedFormula;
    report.patchwork = b1 == 1 ? cycle_planner(g) : three_patch_planner(g);
  } else if (conflicts.only_vertex_pairs) {
    report.lower = report.upper = 2;
    report.reason = DiTCReason::FiniteConflictTwoPatch;
    report.patchwork = conflict_two_patch_planner(g, conflicts.vertex_conflicts);
  } else {
    report.lower = 2;
    report.upper = 3;
    report.reason = DiTCReason::GeneralThreePatch;
    report.patchwork = three_patch_planner(g);
  }
  report.exact = report.lower == report.upper;
  return report;
}

struct ComponentView {
  DirectedGraph graph;
  std::vector<int> local_vertex;  // global vertex -> local, -1 outside
  std::vector<int> local_edge;
  std::vector<VertexId> global_vertex;
  std::vector<EdgeId> global_edge;
};

ComponentView extract_component(const DirectedGraph& g, const std::vector<int>& component_of, int c) {
  ComponentView view;
  view.local_vertex.assign(g.num_vertices(), -1);
  view.local_edge.assign(g.num_edges(), -1);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (component_of[v] != c) continue;
    view.local_vertex[v] = view.graph.add_vertex(g.vertex_name(v));
    view.global_vertex.push_back(v);
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& edge = g.edge(e);
    if (component_of[edge.src] != c) continue;
    view.local_edge[e] = view.graph.add_edge(edge.id, view.local_vertex[edge.src], view.local_vertex[edge.dst]);
    view.global_edge.push_back(e);
  }
  return view;
}

}  // namespace

DiTCReport ditc(const DirectedGraph& g, const DitcOptions& options) {
  if (g.num_vertices() == 0) throw Error(ErrorCode::InvalidInput, "graph has no vertices");
  std::vector<int> component_of;
  const int count = g.components(component_of);
  if (count == 1) return ditc_connected(g);
  if (!options.combine_components) throw Error(ErrorCode::NotConnected, "graph is not connected");

  // Γ never crosses components: bounds combine by max, witnesses patch-wise
  auto component_of_shared = std::make_shared<const std::vector<int>>(component_of);
  std::vector<std::shared_ptr<const ComponentView>> views;
  std::vector<DiTCReport> reports;
  for (int c = 0; c < count; ++c) {
    views.push_back(std::make_shared<const ComponentView>(extract_component(g, component_of, c)));
    reports.push_back(ditc_connected(views.back()->graph));
  }

  DiTCReport out;
  out.lower = 0;
  out.upper = 0;
  std::size_t widest = 0;
  for (std::size_t c = 0; c < reports.size(); ++c) {
    out.lower = std::max(out.lower, reports[c].lower);
    if (reports[c].upper > out.upper) {
      out.upper = reports[c].upper;
      widest = c;
    }
  }
  out.exact = out.lower == out.upper;
  out.reason = reports[widest].reason;

  auto cell_component = [component_of_shared, g_copy = std::make_shared<const DirectedGraph>(g)](const GraphPoint& p) {
    const VertexId v = p.is_vertex() ? p.index : g_copy->edge(p.index).src;
    return (*component_of_shared)[v];
  };
  auto to_local = [](const ComponentView& view, const GraphPoint& p) {
    GraphPoint q = p;
    q.index = p.is_vertex() ? view.local_vertex[p.index] : view.local_edge[p.index];
    return q;
  };

  GraphPatchwork merged;
  merged.ordered_regular = true;
  for (const auto& r : reports) merged.ordered_regular = merged.ordered_regular && r.patchwork->ordered_regular;
  for (int j = 0; j < out.upper; ++j) {
    auto pieces = std::make_shared<std::vector<std::optional<GraphPatchwork::PatchType>>>();
    double bound = 0.0;
    for (const auto& r : reports) {
      if (j < static_cast<int>(r.patchwork->size())) {
        pieces->push_back(r.patchwork->patches[j]);
        bound = std::max(bound, r.patchwork->patches[j].lipschitz_bound);
      } else {
        pieces->push_back(std::nullopt);
      }
    }
    GraphPatchwork::PatchType patch;
    patch.id = reports[widest].patchwork->patches[j].id;
    patch.lipschitz_bound = bound;
    patch.contains = [=](const GraphPoint& x, const GraphPoint& y) {
      const int c = cell_component(x);
      if (c != cell_component(y) || !(*pieces)[c]) return false;
      return (*pieces)[c]->contains(to_local(*views[c], x), to_local(*views[c], y));
    };
    patch.section = [=](const GraphPoint& x, const GraphPoint& y) {
      const int c = cell_component(x);
      if (c != cell_component(y) || !(*pieces)[c]) throw Error(ErrorCode::Unreachable, "pair is not in this patch");
      const ComponentView& view = *views[c];
      DiPath local = (*pieces)[c]->section(to_local(view, x), to_local(view, y));
      DiPath global = local;
      global.origin = x;
      for (auto& s : global.steps) s.edge = view.global_edge[s.edge];
      return global;
    };
    merged.patches.push_back(std::move(patch));
  }
  out.patchwork = std::move(merged);
  return out;
}

}  // namespace ditc
