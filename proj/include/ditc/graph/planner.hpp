#pragma once

#include "ditc/graph/space.hpp"
#include "ditc/graph/traces.hpp"

#include <memory>
#include <utility>
#include <vector>

namespace ditc {

/// Fixed directed paths between reachable vertex pairs (BFS shortest, ties by
/// edge id order, constant on the diagonal) and the piecewise routes built on
/// them: run to the end of the starting edge at constant velocity, follow the
/// fixed vertex path, run into the target edge.
class GraphRoutes {
public:
  explicit GraphRoutes(const DirectedGraph& g);

  const DirectedGraph& graph() const { return oracle_.graph(); }
  const GammaOracle& oracle() const { return oracle_; }

  /// Edge list of the fixed path between two vertices; throws Unreachable.
  const std::vector<EdgeId>& vertex_path(VertexId from, VertexId to) const;

  /// Section value for any (x,y) in Γ; throws Unreachable otherwise.
  DiPath route(const GraphPoint& x, const GraphPoint& y) const;

private:
  GammaOracle oracle_;
  std::vector<std::vector<std::vector<EdgeId>>> paths_;
};

/// The three-patch planner: vertex pairs (plus interior diagonal pairs),
/// mixed vertex/interior pairs, and off-diagonal interior pairs.
GraphPatchwork three_patch_planner(const DirectedGraph& g);

/// One patch covering Γ with the route section (the forced section when every
/// pair has a unique trace class).
GraphPatchwork single_patch_planner(const DirectedGraph& g);

/// Patch 1: the listed vertex pairs with their fixed paths; patch 2: the rest of Γ.
GraphPatchwork conflict_two_patch_planner(const DirectedGraph& g, const std::vector<std::pair<VertexId, VertexId>>& conflicts);

/// Diagonal / off-diagonal planner of a directed cycle (the directed loop is
/// the one-vertex cycle): off the diagonal, move forward around the cycle at
/// constant velocity. Throws InvalidInput unless g is a single directed cycle.
GraphPatchwork cycle_planner(const DirectedGraph& g);

/// Patchwork witnessing the upper bound of ditc(g). Throws NotConnected.
GraphPatchwork build_planner(const DirectedGraph& g);

}  // namespace ditc
