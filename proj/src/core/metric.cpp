#include "ditc/core/metric.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

namespace ditc {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

GraphMetric::GraphMetric(const DirectedGraph& g) : edges_(g.edges()) {
  const int n = g.num_vertices();
  std::vector<std::vector<VertexId>> adjacent(n);
  for (const auto& e : edges_) {
    adjacent[e.src].push_back(e.dst);
    adjacent[e.dst].push_back(e.src);
  }
  dist_.assign(n, std::vector<double>(n, kInf));
  for (VertexId s = 0; s < n; ++s) {
    auto& row = dist_[s];
    row[s] = 0.0;
    std::deque<VertexId> queue{s};
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop_front();
      for (VertexId w : adjacent[v]) {
        if (row[w] == kInf) {
          row[w] = row[v] + 1.0;
          queue.push_back(w);
        }
      }
    }
  }
}

std::vector<GraphMetric::Anchor> GraphMetric::anchors(const GraphPoint& p) const {
  if (p.is_vertex()) return {{p.index, 0.0}};
  const Edge& e = edges_[p.index];
  return {{e.src, p.t}, {e.dst, 1.0 - p.t}};
}

double GraphMetric::distance(const GraphPoint& a, const GraphPoint& b) const {
  double best = kInf;
  if (a.is_interior() && b.is_interior() && a.index == b.index) best = std::abs(a.t - b.t);
  for (const auto& x : anchors(a))
    for (const auto& y : anchors(b)) best = std::min(best, x.offset + dist_[x.vertex][y.vertex] + y.offset);
  return best;
}

double sup_distance(const DirectedGraph& g, const GraphMetric& metric, const DiPath& p, const DiPath& q, int samples) {
  double worst = 0.0;
  const int n = std::max(samples, 2);
  for (int k = 0; k < n; ++k) {
    const double s = static_cast<double>(k) / (n - 1);
    worst = std::max(worst, metric.distance(evaluate(g, p, s), evaluate(g, q, s)));
  }
  return worst;
}

}  // namespace ditc
