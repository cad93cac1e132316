#include "ditc/core/polyline.hpp"

#include "ditc/core/error.hpp"

#include <algorithm>
#include <cmath>

namespace ditc {

double euclidean(const Coords& a, const Coords& b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(sum);
}

double Polyline::length() const {
  double total = 0.0;
  for (std::size_t i = 1; i < corners.size(); ++i) total += euclidean(corners[i - 1], corners[i]);
  return total;
}

Coords Polyline::evaluate(double s) const {
  if (!(s >= 0.0 && s <= 1.0)) throw Error(ErrorCode::OutOfRange, "path fraction must lie in [0,1]");
  if (corners.empty()) throw Error(ErrorCode::InvalidInput, "empty polyline");
  const double total = length();
  if (total == 0.0 || s == 0.0) return corners.front();
  if (s == 1.0) return corners.back();
  double remaining = s * total;
  for (std::size_t i = 1; i < corners.size(); ++i) {
    const double seg = euclidean(corners[i - 1], corners[i]);
    if (remaining <= seg && seg > 0.0) {
      const double lam = remaining / seg;
      Coords out(corners[i].size());
      for (std::size_t k = 0; k < out.size(); ++k) out[k] = corners[i - 1][k] + lam * (corners[i][k] - corners[i - 1][k]);
      return out;
    }
    remaining -= seg;
  }
  return corners.back();
}

Polyline Polyline::simplified() const {
  Polyline out;
  for (const auto& c : corners) {
    if (!out.corners.empty() && euclidean(out.corners.back(), c) == 0.0) continue;
    if (out.corners.size() >= 2) {
      const Coords& a = out.corners[out.corners.size() - 2];
      const Coords& b = out.corners.back();
      // collinear and same direction: b lies on segment a -> c
      const double ab = euclidean(a, b), bc = euclidean(b, c), ac = euclidean(a, c);
      if (std::abs(ab + bc - ac) <= 1e-12 * std::max(1.0, ac)) {
        out.corners.back() = c;
        continue;
      }
    }
    out.corners.push_back(c);
  }
  if (out.corners.empty() && !corners.empty()) out.corners.push_back(corners.front());
  return out;
}

bool is_monotone(const Polyline& p) {
  for (std::size_t i = 1; i < p.corners.size(); ++i)
    for (std::size_t k = 0; k < p.corners[i].size(); ++k)
      if (p.corners[i][k] < p.corners[i - 1][k]) return false;
  return true;
}

nlohmann::json coords_to_json(const Coords& c) {
  nlohmann::json out = nlohmann::json::array();
  for (double v : c) out.push_back(v);
  return out;
}

}  // namespace ditc
