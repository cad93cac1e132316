#pragma once

#include "ditc/core/metric.hpp"
#include "ditc/core/patchwork.hpp"
#include "ditc/graph/gamma.hpp"

#include <optional>
#include <random>
#include <string>

namespace ditc {

using GraphPatchwork = Patchwork<GraphPoint, DiPath>;

/// A graph as a sampled d-space for the numeric testers. Sampling is uniform
/// over cells (vertex or edge), then uniform on the edge parameter.
class GraphSpace {
public:
  using Point = GraphPoint;
  using Path = DiPath;

  explicit GraphSpace(const DirectedGraph& g) : oracle_(g), metric_(g) {}

  const DirectedGraph& graph() const { return oracle_.graph(); }
  const GammaOracle& oracle() const { return oracle_; }
  const GraphMetric& metric() const { return metric_; }

  bool in_gamma(const Point& x, const Point& y) const { return oracle_.contains(x, y); }

  Point sample(std::mt19937_64& rng) const {
    const auto& g = graph();
    std::uniform_int_distribution<int> cell(0, g.num_cells() - 1);
    const int c = cell(rng);
    if (c < g.num_vertices()) return GraphPoint::vertex(c);
    std::uniform_real_distribution<double> param(0.0, 1.0);
    double t = 0.0;
    do {
      t = param(rng);
    } while (!(t > kParamTol && t < 1.0 - kParamTol));
    return {GraphPoint::Kind::Edge, c - g.num_vertices(), t};
  }

  /// Moves an interior point along its own edge by at most eps; vertices stay.
  Point perturb(const Point& p, double eps, std::mt19937_64& rng) const {
    if (p.is_vertex()) return p;
    std::uniform_real_distribution<double> shift(-eps, eps);
    for (int i = 0; i < 16; ++i) {
      const double t = p.t + shift(rng);
      if (t > kParamTol && t < 1.0 - kParamTol) return {GraphPoint::Kind::Edge, p.index, t};
    }
    return p;
  }

  Point lerp(const Point& a, const Point& b, double lam) const {
    if (a.is_vertex() || b.is_vertex() || a.index != b.index) return lam < 1.0 ? a : b;
    return {GraphPoint::Kind::Edge, a.index, a.t + lam * (b.t - a.t)};
  }

  /// Whether the straight move from (x,y) to (x2,y2) passes through a pair of
  /// equal points: all four on one edge and the order of the pair flips or ties.
  bool meets_diagonal(const Point& x, const Point& y, const Point& x2, const Point& y2) const {
    if (!x.is_interior() || !y.is_interior() || !x2.is_interior() || !y2.is_interior()) return false;
    if (x.index != y.index || x2.index != x.index || y2.index != x.index) return false;
    const double before = y.t - x.t, after = y2.t - x2.t;
    return before * after <= 0.0;
  }

  bool same_point(const Point& a, const Point& b) const { return ditc::same_point(a, b); }
  double distance(const Point& a, const Point& b) const { return metric_.distance(a, b); }
  Point start(const Path& p) const { return path_start(p); }
  Point end(const Path& p) const { return path_end(graph(), p); }
  Point evaluate(const Path& p, double s) const { return ditc::evaluate(graph(), p, s); }
  std::optional<std::string> check_path(const Path& p) const { return validate_path(graph(), p); }
  std::string encode(const Point& p) const { return encode_point(graph(), p); }

private:
  GammaOracle oracle_;
  GraphMetric metric_;
};

}  // namespace ditc
