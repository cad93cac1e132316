#pragma once

#include "ditc/graph/ditc.hpp"

#include <random>
#include <string>
#include <utility>
#include <vector>

namespace ditc {

using ProductPoint = std::vector<GraphPoint>;
/// One path per coordinate, all driven by the same parameter s in [0,1];
/// each coordinate moves at its own constant speed.
using ProductPath = std::vector<DiPath>;
using ProductPatchwork = Patchwork<ProductPoint, ProductPath>;

struct ProductFactor {
  DirectedGraph graph;
  GraphPatchwork planner;
};

class ProductGamma {
public:
  explicit ProductGamma(const std::vector<ProductFactor>& factors);
  bool contains(const ProductPoint& x, const ProductPoint& y) const;  // throws DimensionMismatch
  std::size_t dimension() const { return oracles_.size(); }

private:
  std::vector<GammaOracle> oracles_;
};

/// Componentwise reachability; throws InvalidInput with no factors.
ProductGamma product_gamma(const std::vector<ProductFactor>& factors);

/// Patches G_0..G_N, N = Σ(n_i - 1): G_j collects the pairs whose factor patch
/// indices sum to j. Throws NotRegular if a factor is not flagged regular.
ProductPatchwork product_planner(const std::vector<ProductFactor>& factors);

/// Product of graphs as a sampled d-space, L1 distance across coordinates.
class ProductSpace {
public:
  using Point = ProductPoint;
  using Path = ProductPath;

  explicit ProductSpace(const std::vector<ProductFactor>& factors);

  std::size_t dimension() const { return spaces_.size(); }
  const GraphSpace& factor(std::size_t i) const { return spaces_.at(i); }

  bool in_gamma(const Point& x, const Point& y) const;
  Point sample(std::mt19937_64& rng) const;
  Point perturb(const Point& p, double eps, std::mt19937_64& rng) const;
  Point lerp(const Point& a, const Point& b, double lam) const;
  bool same_point(const Point& a, const Point& b) const;
  bool meets_diagonal(const Point& x, const Point& y, const Point& x2, const Point& y2) const;
  double distance(const Point& a, const Point& b) const;
  Point start(const Path& p) const;
  Point end(const Path& p) const;
  Point evaluate(const Path& p, double s) const;
  std::optional<std::string> check_path(const Path& p) const;
  std::string encode(const Point& p) const;

private:
  std::vector<GraphSpace> spaces_;
};

struct TorusPlanner {
  std::vector<ProductFactor> factors;
  ProductPatchwork planner;
  DiTCReport report;  // exact n+1, KnownBuiltin; no graph patchwork attached
};

/// Product of n directed-loop planners. Throws InvalidInput for n < 1.
TorusPlanner torus_planner(int n);

/// Angles in turns, "0.25,0.5"; 0 is the loop vertex. Values are taken mod 1.
ProductPoint parse_torus_point(int n, const std::string& text);
std::string format_torus_point(const ProductPoint& p);

}  // namespace ditc
