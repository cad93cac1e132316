#pragma once

#include "ditc/core/dipath.hpp"

#include <vector>

namespace ditc {

/// Shortest-path metric on the underlying undirected graph, unit edge lengths.
/// Points in different components are at infinite distance.
class GraphMetric {
public:
  explicit GraphMetric(const DirectedGraph& g);

  double distance(const GraphPoint& a, const GraphPoint& b) const;
  double vertex_distance(VertexId a, VertexId b) const { return dist_[a][b]; }

private:
  struct Anchor {
    VertexId vertex;
    double offset;
  };
  std::vector<Anchor> anchors(const GraphPoint& p) const;

  std::vector<Edge> edges_;
  std::vector<std::vector<double>> dist_;
};

/// Max over `samples` evenly spaced fractions of the pointwise distance.
double sup_distance(const DirectedGraph& g, const GraphMetric& metric, const DiPath& p, const DiPath& q,
                    int samples = 64);

}  // namespace ditc
