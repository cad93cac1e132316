#pragma once

#include "ditc/core/patchwork.hpp"
#include "ditc/core/polyline.hpp"
#include "ditc/graph/ditc.hpp"

#include <map>
#include <optional>
#include <random>
#include <shared_mutex>
#include <string>
#include <utility>

namespace ditc {

/// A point of the directed sphere: the boundary of [0,1]^(n+1), with the
/// monotone paths that stay on the boundary.
using SpherePoint = Coords;

/// Throws DimensionMismatch unless p has n+1 coordinates, InvalidInput unless
/// p lies on the boundary of the cube.
void check_sphere_point(int n, const SpherePoint& p);

/// Reachability by breadth-first search over monotone moves on a lattice of
/// the boundary. Per axis the lattice uses the multiples of 1/grid inside
/// [x_d, y_d] together with x_d and y_d themselves; a move along axis d is
/// allowed when another coordinate sits at 0 or 1 (the segment then lies in a
/// face). Results are memoized behind a shared lock.
class SphereOracle {
public:
  explicit SphereOracle(int n, int grid = 16);  // throws InvalidInput for n < 1 or grid < 1

  bool contains(const SpherePoint& x, const SpherePoint& y) const;
  int n() const { return n_; }
  int grid() const { return grid_; }

private:
  bool search(const SpherePoint& x, const SpherePoint& y) const;

  int n_;
  int grid_;
  mutable std::shared_mutex mutex_;
  mutable std::map<std::pair<SpherePoint, SpherePoint>, bool> cache_;
};

bool sphere_gamma(int n, const SpherePoint& x, const SpherePoint& y, int grid = 16);

/// x <= y and some coordinate equals 0 (or 1) in both points.
bool share_face(const SpherePoint& x, const SpherePoint& y);

using SpherePatchwork = Patchwork<SpherePoint, Polyline>;

/// Two-patch planner on the boundary of the square: "I+" is Γ over the
/// lower-right arc (0,0) -> (1,0) -> (1,1), "I-" is Γ over the upper-left arc
/// (0,0) -> (0,1) -> (1,1) minus the pairs of corners already in "I+".
SpherePatchwork sphere_planner();

/// Section value of sphere_planner(); throws Unreachable outside Γ.
Polyline sphere_planner_1(const SpherePoint& x, const SpherePoint& y);

/// 2 for every n >= 1, taken from the literature, not computed.
DiTCReport sphere_ditc(int n);

/// The boundary of the square as a sampled d-space: corners and open sides
/// chosen uniformly, then a uniform position along the side.
class SphereSpace {
public:
  using Point = SpherePoint;
  using Path = Polyline;

  explicit SphereSpace(int grid = 16) : oracle_(1, grid) {}

  bool in_gamma(const Point& x, const Point& y) const { return oracle_.contains(x, y); }
  Point sample(std::mt19937_64& rng) const;
  Point perturb(const Point& p, double eps, std::mt19937_64& rng) const;
  Point lerp(const Point& a, const Point& b, double lam) const;
  bool same_point(const Point& a, const Point& b) const;
  double distance(const Point& a, const Point& b) const { return euclidean(a, b); }
  Point start(const Path& p) const { return p.start(); }
  Point end(const Path& p) const { return p.end(); }
  Point evaluate(const Path& p, double s) const { return p.evaluate(s); }
  std::optional<std::string> check_path(const Path& p) const;
  std::string encode(const Point& p) const;

private:
  SphereOracle oracle_;
};

SpherePoint parse_sphere_point(const std::string& text);

}  // namespace ditc
