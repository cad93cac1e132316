#pragma once

#include <nlohmann/json.hpp>

#include <vector>

namespace ditc {

using Coords = std::vector<double>;

/// Piecewise-linear path in R^d through the listed corners, parametrized at
/// constant Euclidean speed. A single corner is a constant path.
struct Polyline {
  std::vector<Coords> corners;

  double length() const;
  Coords start() const { return corners.front(); }
  Coords end() const { return corners.back(); }
  Coords evaluate(double s) const;  // throws OutOfRange unless s in [0,1]

  /// Drop repeated corners and merge collinear consecutive segments.
  Polyline simplified() const;
};

double euclidean(const Coords& a, const Coords& b);

/// Coordinatewise non-decreasing along every segment.
bool is_monotone(const Polyline& p);

nlohmann::json coords_to_json(const Coords& c);

}  // namespace ditc
