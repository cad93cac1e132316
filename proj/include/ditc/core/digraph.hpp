#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace ditc {

using VertexId = int;
using EdgeId = int;

/// Tolerance on edge parameters when comparing points; vertex identity is exact.
inline constexpr double kParamTol = 1e-9;

struct Edge {
  std::string id;
  VertexId src = 0;
  VertexId dst = 0;

  bool is_loop() const { return src == dst; }
};

/// A directed multigraph viewed as a d-space: every edge is a directed copy of
/// the unit interval (or of the directed loop when src == dst), and directed
/// paths are concatenations of forward runs along edges.
class DirectedGraph {
public:
  DirectedGraph() = default;

  VertexId add_vertex(const std::string& name);
  EdgeId add_edge(const std::string& id, const std::string& src, const std::string& dst);
  EdgeId add_edge(const std::string& id, VertexId src, VertexId dst);

  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int num_cells() const { return num_vertices() + num_edges(); }

  const std::string& vertex_name(VertexId v) const { return vertices_.at(v); }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  const std::vector<std::string>& vertex_names() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

  VertexId vertex_index(const std::string& name) const;  // throws InvalidInput
  EdgeId edge_index(const std::string& id) const;        // throws InvalidInput
  bool has_vertex(const std::string& name) const { return vertex_lookup_.count(name) > 0; }
  bool has_edge(const std::string& id) const { return edge_lookup_.count(id) > 0; }

  /// Outgoing edges of v ordered by edge id (lexicographic), the tie-break
  /// order used everywhere a deterministic choice between edges is needed.
  const std::vector<EdgeId>& out_edges(VertexId v) const { return out_.at(v); }

  /// Connected components of the underlying undirected graph, as a
  /// component index per vertex; returns the component count.
  int components(std::vector<int>& component_of) const;
  int num_components() const;

  bool operator==(const DirectedGraph& other) const;

private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::map<std::string, VertexId> vertex_lookup_;
  std::map<std::string, EdgeId> edge_lookup_;
  std::vector<std::vector<EdgeId>> out_;
};

/// A location on a graph: either a vertex, or a point strictly inside an edge.
struct GraphPoint {
  enum class Kind : std::uint8_t { Vertex, Edge };

  Kind kind = Kind::Vertex;
  int index = 0;  // VertexId or EdgeId depending on kind
  double t = 0.0; // edge parameter, only meaningful for Kind::Edge

  static GraphPoint vertex(VertexId v) { return {Kind::Vertex, v, 0.0}; }
  static GraphPoint interior(EdgeId e, double t);  // requires 0 < t < 1

  bool is_vertex() const { return kind == Kind::Vertex; }
  bool is_interior() const { return kind == Kind::Edge; }
};

/// Vertex identity is exact; interior points compare parameters within kParamTol.
bool same_point(const GraphPoint& a, const GraphPoint& b);

/// The point at parameter t of edge e; parameters within kParamTol of 0 or 1
/// collapse to the corresponding endpoint vertex.
GraphPoint point_on(const DirectedGraph& g, EdgeId e, double t);

/// Throws InvalidInput when the point does not belong to g.
void check_point(const DirectedGraph& g, const GraphPoint& p);

/// "v:<vertex-id>" or "e:<edge-id>:<t>".
std::string encode_point(const DirectedGraph& g, const GraphPoint& p);
GraphPoint parse_point(const DirectedGraph& g, const std::string& text);

/// Shortest round-trippable decimal form of a double.
std::string format_double(double value);

}  // namespace ditc
