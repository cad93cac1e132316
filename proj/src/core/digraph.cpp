#include "ditc/core/digraph.hpp"

#include "ditc/core/error.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>

namespace ditc {

VertexId DirectedGraph::add_vertex(const std::string& name) {
  if (name.empty()) throw Error(ErrorCode::InvalidInput, "empty vertex id");
  if (vertex_lookup_.count(name)) throw Error(ErrorCode::InvalidInput, "duplicate vertex id '" + name + "'");
  const VertexId v = num_vertices();
  vertices_.push_back(name);
  vertex_lookup_.emplace(name, v);
  out_.emplace_back();
  return v;
}

EdgeId DirectedGraph::add_edge(const std::string& id, const std::string& src, const std::string& dst) {
  return add_edge(id, vertex_index(src), vertex_index(dst));
}

EdgeId DirectedGraph::add_edge(const std::string& id, VertexId src, VertexId dst) {
  if (id.empty()) throw Error(ErrorCode::InvalidInput, "empty edge id");
  if (edge_lookup_.count(id)) throw Error(ErrorCode::InvalidInput, "duplicate edge id '" + id + "'");
  if (src < 0 || src >= num_vertices() || dst < 0 || dst >= num_vertices())
    throw Error(ErrorCode::InvalidInput, "edge '" + id + "' references a missing vertex");
  const EdgeId e = num_edges();
  edges_.push_back({id, src, dst});
  edge_lookup_.emplace(id, e);
  auto& out = out_[src];
  out.push_back(e);
  std::sort(out.begin(), out.end(), [this](EdgeId a, EdgeId b) { return edges_[a].id < edges_[b].id; });
  return e;
}

VertexId DirectedGraph::vertex_index(const std::string& name) const {
  auto it = vertex_lookup_.find(name);
  if (it == vertex_lookup_.end()) throw Error(ErrorCode::InvalidInput, "unknown vertex '" + name + "'");
  return it->second;
}

EdgeId DirectedGraph::edge_index(const std::string& id) const {
  auto it = edge_lookup_.find(id);
  if (it == edge_lookup_.end()) throw Error(ErrorCode::InvalidInput, "unknown edge '" + id + "'");
  return it->second;
}

int DirectedGraph::components(std::vector<int>& component_of) const {
  std::vector<int> parent(vertices_.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& e : edges_) parent[find(e.src)] = find(e.dst);

  component_of.assign(vertices_.size(), -1);
  std::vector<int> label(vertices_.size(), -1);
  int count = 0;
  for (int v = 0; v < num_vertices(); ++v) {
    const int root = find(v);
    if (label[root] < 0) label[root] = count++;
    component_of[v] = label[root];
  }
  return count;
}

int DirectedGraph::num_components() const {
  std::vector<int> unused;
  return components(unused);
}

bool DirectedGraph::operator==(const DirectedGraph& other) const {
  if (vertices_ != other.vertices_ || edges_.size() != other.edges_.size()) return false;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& a = edges_[i];
    const auto& b = other.edges_[i];
    if (a.id != b.id || a.src != b.src || a.dst != b.dst) return false;
  }
  return true;
}

GraphPoint GraphPoint::interior(EdgeId e, double t) {
  if (!(t > 0.0 && t < 1.0)) throw Error(ErrorCode::InvalidInput, "edge-interior parameter must lie in (0,1)");
  return {Kind::Edge, e, t};
}

bool same_point(const GraphPoint& a, const GraphPoint& b) {
  if (a.kind != b.kind || a.index != b.index) return false;
  return a.is_vertex() || std::abs(a.t - b.t) <= kParamTol;
}

GraphPoint point_on(const DirectedGraph& g, EdgeId e, double t) {
  const Edge& edge = g.edge(e);
  if (t <= kParamTol) return GraphPoint::vertex(edge.src);
  if (t >= 1.0 - kParamTol) return GraphPoint::vertex(edge.dst);
  return {GraphPoint::Kind::Edge, e, t};
}

void check_point(const DirectedGraph& g, const GraphPoint& p) {
  if (p.is_vertex()) {
    if (p.index < 0 || p.index >= g.num_vertices()) throw Error(ErrorCode::InvalidInput, "vertex index out of range");
    return;
  }
  if (p.index < 0 || p.index >= g.num_edges()) throw Error(ErrorCode::InvalidInput, "edge index out of range");
  if (!(p.t > 0.0 && p.t < 1.0)) throw Error(ErrorCode::InvalidInput, "edge-interior parameter must lie in (0,1)");
}

std::string format_double(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc{}) throw Error(ErrorCode::InvalidInput, "cannot format number");
  return std::string(buf, end);
}

std::string encode_point(const DirectedGraph& g, const GraphPoint& p) {
  if (p.is_vertex()) return "v:" + g.vertex_name(p.index);
  return "e:" + g.edge(p.index).id + ":" + format_double(p.t);
}

GraphPoint parse_point(const DirectedGraph& g, const std::string& text) {
  if (text.rfind("v:", 0) == 0) return GraphPoint::vertex(g.vertex_index(text.substr(2)));
  if (text.rfind("e:", 0) == 0) {
    const auto colon = text.rfind(':');
    if (colon <= 1) throw Error(ErrorCode::InvalidInput, "malformed point '" + text + "'");
    const std::string id = text.substr(2, colon - 2);
    const std::string num = text.substr(colon + 1);
    double t = 0.0;
    auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), t);
    if (ec != std::errc{} || ptr != num.data() + num.size())
      throw Error(ErrorCode::InvalidInput, "malformed edge parameter in '" + text + "'");
    const EdgeId e = g.edge_index(id);
    if (t < 0.0 || t > 1.0) throw Error(ErrorCode::InvalidInput, "edge parameter outside [0,1] in '" + text + "'");
    return point_on(g, e, t);
  }
  throw Error(ErrorCode::InvalidInput, "point must start with 'v:' or 'e:' ('" + text + "')");
}

}  // namespace ditc
