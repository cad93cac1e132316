#include "ditc/graph/gamma.hpp"

#include "ditc/core/error.hpp"

#include <algorithm>
#include <deque>

namespace ditc {

GammaOracle::GammaOracle(const DirectedGraph& g) : graph_(g) {
  const int n = g.num_vertices();
  reach_.assign(n, std::vector<char>(n, 0));
  for (VertexId s = 0; s < n; ++s) {
    auto& row = reach_[s];
    row[s] = 1;
    std::deque<VertexId> queue{s};
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop_front();
      for (EdgeId e : g.out_edges(v)) {
        const VertexId w = g.edge(e).dst;
        if (!row[w]) {
          row[w] = 1;
          queue.push_back(w);
        }
      }
    }
  }
}

bool GammaOracle::contains(const GraphPoint& x, const GraphPoint& y) const {
  if (same_point(x, y)) return true;
  if (x.is_vertex() && y.is_vertex()) return reaches(x.index, y.index);
  if (x.is_vertex()) return reaches(x.index, graph_.edge(y.index).src);
  const Edge& ex = graph_.edge(x.index);
  if (y.is_vertex()) return reaches(ex.dst, y.index);
  const Edge& ey = graph_.edge(y.index);
  if (x.index == y.index && x.t <= y.t) return true;
  return reaches(ex.dst, ey.src);
}

GammaOracle gamma(const DirectedGraph& g) { return GammaOracle(g); }

bool is_strongly_connected_dspace(const DirectedGraph& g) {
  const GammaOracle oracle(g);
  for (VertexId a = 0; a < g.num_vertices(); ++a)
    for (VertexId b = 0; b < g.num_vertices(); ++b)
      if (!oracle.reaches(a, b)) return false;
  return true;
}

int betti1(const DirectedGraph& g) { return g.num_edges() - g.num_vertices() + g.num_components(); }

int classical_tc_graph(const DirectedGraph& g) {
  if (g.num_vertices() == 0 || g.num_components() != 1)
    throw Error(ErrorCode::NotConnected, "classical TC formula needs a connected graph");
  return std::min(betti1(g), 2) + 1;
}

DirectedGraph subdivide(const DirectedGraph& g) {
  DirectedGraph out;
  for (const auto& name : g.vertex_names()) out.add_vertex(name);
  for (const auto& e : g.edges()) {
    const std::string mid = "m_" + e.id;
    out.add_vertex(mid);
    out.add_edge(e.id + ".0", g.vertex_name(e.src), mid);
    out.add_edge(e.id + ".1", mid, g.vertex_name(e.dst));
  }
  return out;
}

}  // namespace ditc
