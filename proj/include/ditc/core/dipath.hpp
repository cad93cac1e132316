#pragma once

#include "ditc/core/digraph.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace ditc {

/// One forward run along an edge, from parameter `from` to `to` (from <= to).
struct Step {
  EdgeId edge = 0;
  double from = 0.0;
  double to = 1.0;

  double span() const { return to - from; }
};

/// A directed path on a graph. `origin` is stored explicitly so that constant
/// paths (no steps) still know where they sit. Parametrization is constant
/// speed with respect to the summed parameter spans of the steps.
struct DiPath {
  GraphPoint origin;
  std::vector<Step> steps;

  static DiPath constant(const GraphPoint& p) { return {p, {}}; }

  double length() const;
  bool is_constant() const { return length() == 0.0; }
};

GraphPoint path_start(const DiPath& p);
GraphPoint path_end(const DirectedGraph& g, const DiPath& p);

/// Returns a description of the first broken invariant, or nullopt.
std::optional<std::string> validate_path(const DirectedGraph& g, const DiPath& p);

/// p followed by q; throws EndpointMismatch unless end(p) == start(q).
DiPath concatenate(const DirectedGraph& g, const DiPath& p, const DiPath& q);

/// Position at fraction s of the path; throws OutOfRange unless s in [0,1].
GraphPoint evaluate(const DirectedGraph& g, const DiPath& p, double s);

/// The portion of p between fractions a <= b, as a path in its own right.
DiPath subpath(const DirectedGraph& g, const DiPath& p, double a, double b);

/// Path along a single edge from parameter `from` to `to`.
DiPath edge_run(const DirectedGraph& g, EdgeId e, double from, double to);

/// Full traversal of each listed edge in order, starting at `start`.
DiPath edge_walk(const DirectedGraph& g, VertexId start, const std::vector<EdgeId>& edges);

/// Path JSON: {"start":"v:b","steps":[{"edge":"top","from":0.0,"to":1.0}]}.
nlohmann::json path_to_json(const DirectedGraph& g, const DiPath& p);
DiPath path_from_json(const DirectedGraph& g, const nlohmann::json& j);

}  // namespace ditc
