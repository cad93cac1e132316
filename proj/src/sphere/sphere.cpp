#include "ditc/sphere/sphere.hpp"

#include "ditc/core/digraph.hpp"
#include "ditc/core/error.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <mutex>
#include <sstream>

namespace ditc {

namespace {

constexpr double kFaceTol = 1e-9;

bool extremal(double v) { return v == 0.0 || v == 1.0; }

// snaps near-boundary coordinates so that face tests can be exact
SpherePoint snapped(const SpherePoint& p) {
  SpherePoint out = p;
  for (double& v : out) {
    if (std::abs(v) <= kFaceTol) v = 0.0;
    if (std::abs(v - 1.0) <= kFaceTol) v = 1.0;
  }
  return out;
}

}  // namespace

void check_sphere_point(int n, const SpherePoint& p) {
  if (static_cast<int>(p.size()) != n + 1)
    throw Error(ErrorCode::DimensionMismatch,
                "expected " + std::to_string(n + 1) + " coordinates, got " + std::to_string(p.size()));
  bool on_boundary = false;
  for (double v : p) {
    if (!(v >= -kFaceTol && v <= 1.0 + kFaceTol)) throw Error(ErrorCode::InvalidInput, "coordinate outside [0,1]");
    on_boundary = on_boundary || std::abs(v) <= kFaceTol || std::abs(v - 1.0) <= kFaceTol;
  }
  if (!on_boundary) throw Error(ErrorCode::InvalidInput, "point is not on the boundary of the cube");
}

bool share_face(const SpherePoint& x, const SpherePoint& y) {
  const SpherePoint a = snapped(x), b = snapped(y);
  if (a.size() != b.size()) return false;
  bool common = false;
  for (std::size_t d = 0; d < a.size(); ++d) {
    if (a[d] > b[d]) return false;
    common = common || (a[d] == b[d] && extremal(a[d]));
  }
  return common;
}

SphereOracle::SphereOracle(int n, int grid) : n_(n), grid_(grid) {
  if (n < 1) throw Error(ErrorCode::InvalidInput, "sphere dimension must be at least 1");
  if (grid < 1) throw Error(ErrorCode::InvalidInput, "grid must be positive");
}

bool SphereOracle::contains(const SpherePoint& x, const SpherePoint& y) const {
  check_sphere_point(n_, x);
  check_sphere_point(n_, y);
  const SpherePoint a = snapped(x), b = snapped(y);
  for (std::size_t d = 0; d < a.size(); ++d)
    if (a[d] > b[d]) return false;
  if (share_face(a, b)) return true;
  auto key = std::make_pair(a, b);
  {
    std::shared_lock lock(mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  const bool result = search(a, b);
  std::unique_lock lock(mutex_);
  cache_.emplace(std::move(key), result);
  return result;
}

bool SphereOracle::search(const SpherePoint& x, const SpherePoint& y) const {
  const int dims = n_ + 1;
  std::vector<std::vector<double>> values(dims);
  std::vector<std::size_t> stride(dims);
  std::size_t total = 1;
  for (int d = 0; d < dims; ++d) {
    auto& v = values[d];
    v.push_back(x[d]);
    for (int k = 0; k <= grid_; ++k) {
      const double g = static_cast<double>(k) / grid_;
      if (g > x[d] && g < y[d]) v.push_back(g);
    }
    if (y[d] > x[d]) v.push_back(y[d]);
    stride[d] = total;
    total *= v.size();
  }
  auto value = [&](std::size_t node, int d) { return values[d][(node / stride[d]) % values[d].size()]; };
  auto index = [&](std::size_t node, int d) { return (node / stride[d]) % values[d].size(); };

  const std::size_t target = total - 1;
  std::vector<char> seen(total, 0);
  std::deque<std::size_t> queue{0};
  seen[0] = 1;
  while (!queue.empty()) {
    const std::size_t node = queue.front();
    queue.pop_front();
    if (node == target) return true;
    for (int d = 0; d < dims; ++d) {
      if (index(node, d) + 1 >= values[d].size()) continue;
      bool on_face = false;
      for (int c = 0; c < dims && !on_face; ++c) on_face = c != d && extremal(value(node, c));
      if (!on_face) continue;
      const std::size_t next = node + stride[d];
      if (seen[next]) continue;
      seen[next] = 1;
      queue.push_back(next);
    }
  }
  return false;
}

bool sphere_gamma(int n, const SpherePoint& x, const SpherePoint& y, int grid) {
  static std::mutex registry_mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<SphereOracle>> registry;
  const SphereOracle* oracle = nullptr;
  {
    std::lock_guard lock(registry_mutex);
    auto& slot = registry[{n, grid}];
    if (!slot) slot = std::make_unique<SphereOracle>(n, grid);
    oracle = slot.get();
  }
  return oracle->contains(x, y);
}

namespace {

// the two monotone arcs of the square, parametrized by arc length in [0,2]
enum class Arc { Plus, Minus };

std::optional<double> arc_position(Arc arc, const SpherePoint& p) {
  const double u = p[0], v = p[1];
  if (arc == Arc::Plus) {
    if (v == 0.0) return u;
    if (u == 1.0) return 1.0 + v;
  } else {
    if (u == 0.0) return v;
    if (v == 1.0) return 1.0 + u;
  }
  return std::nullopt;
}

SpherePoint arc_point(Arc arc, double s) {
  if (arc == Arc::Plus) return s <= 1.0 ? SpherePoint{s, 0.0} : SpherePoint{1.0, s - 1.0};
  return s <= 1.0 ? SpherePoint{0.0, s} : SpherePoint{s - 1.0, 1.0};
}

bool on_arc(Arc arc, const SpherePoint& x, const SpherePoint& y) {
  const auto a = arc_position(arc, x), b = arc_position(arc, y);
  return a && b && *a <= *b;
}

Polyline arc_path(Arc arc, const SpherePoint& x, const SpherePoint& y) {
  const double a = *arc_position(arc, x), b = *arc_position(arc, y);
  Polyline p;
  p.corners.push_back(x);
  if (a < 1.0 && b > 1.0) p.corners.push_back(arc_point(arc, 1.0));
  p.corners.push_back(y);
  return p.simplified();
}

bool corner_pair(const SpherePoint& x, const SpherePoint& y) {
  auto corner = [](const SpherePoint& p) { return (p[0] == 0.0 && p[1] == 0.0) || (p[0] == 1.0 && p[1] == 1.0); };
  return corner(x) && corner(y);
}

SpherePatchwork::PatchType arc_patch(const std::string& id, Arc arc, bool drop_corner_pairs) {
  SpherePatchwork::PatchType patch;
  patch.id = id;
  patch.contains = [arc, drop_corner_pairs](const SpherePoint& x, const SpherePoint& y) {
    if (x.size() != 2 || y.size() != 2) return false;
    const SpherePoint a = snapped(x), b = snapped(y);
    if (drop_corner_pairs && corner_pair(a, b)) return false;
    return on_arc(arc, a, b);
  };
  patch.section = [arc](const SpherePoint& x, const SpherePoint& y) {
    const SpherePoint a = snapped(x), b = snapped(y);
    if (!on_arc(arc, a, b)) throw Error(ErrorCode::Unreachable, "pair is not on this arc");
    Polyline p = arc_path(arc, a, b);
    p.corners.front() = x;
    p.corners.back() = y;
    return p;
  };
  return patch;
}

}  // namespace

SpherePatchwork sphere_planner() {
  SpherePatchwork pw;
  pw.patches.push_back(arc_patch("I+", Arc::Plus, false));
  pw.patches.push_back(arc_patch("I-", Arc::Minus, true));
  pw.ordered_regular = true;
  return pw;
}

Polyline sphere_planner_1(const SpherePoint& x, const SpherePoint& y) {
  check_sphere_point(1, x);
  check_sphere_point(1, y);
  static const SpherePatchwork planner = sphere_planner();
  return planner.plan(x, y).second;
}

DiTCReport sphere_ditc(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidInput, "sphere dimension must be at least 1");
  DiTCReport r;
  r.lower = r.upper = 2;
  r.exact = true;
  r.reason = DiTCReason::KnownBuiltin;
  return r;
}

SpherePoint SphereSpace::sample(std::mt19937_64& rng) const {
  std::uniform_int_distribution<int> cell(0, 7);
  std::uniform_real_distribution<double> param(0.0, 1.0);
  const int c = cell(rng);
  if (c < 4) return {static_cast<double>(c & 1), static_cast<double>(c >> 1)};
  double t = 0.0;
  do {
    t = param(rng);
  } while (!(t > kFaceTol && t < 1.0 - kFaceTol));
  switch (c) {
    case 4: return {t, 0.0};
    case 5: return {t, 1.0};
    case 6: return {0.0, t};
    default: return {1.0, t};
  }
}

SpherePoint SphereSpace::perturb(const Point& p, double eps, std::mt19937_64& rng) const {
  const SpherePoint q = snapped(p);
  const bool fixed0 = extremal(q[0]), fixed1 = extremal(q[1]);
  if (fixed0 == fixed1) return p;  // corner
  const int free = fixed0 ? 1 : 0;
  std::uniform_real_distribution<double> shift(-eps, eps);
  for (int i = 0; i < 16; ++i) {
    SpherePoint out = q;
    out[free] += shift(rng);
    if (out[free] > kFaceTol && out[free] < 1.0 - kFaceTol) return out;
  }
  return p;
}

SpherePoint SphereSpace::lerp(const Point& a, const Point& b, double lam) const {
  const SpherePoint p = snapped(a), q = snapped(b);
  for (int d = 0; d < 2; ++d)
    if (p[d] == q[d] && extremal(p[d])) return {p[0] + lam * (q[0] - p[0]), p[1] + lam * (q[1] - p[1])};
  return lam < 1.0 ? a : b;
}

bool SphereSpace::same_point(const Point& a, const Point& b) const {
  if (a.size() != b.size()) return false;
  for (std::size_t d = 0; d < a.size(); ++d)
    if (std::abs(a[d] - b[d]) > kParamTol) return false;
  return true;
}

std::optional<std::string> SphereSpace::check_path(const Path& p) const {
  if (p.corners.empty()) return "path has no corners";
  for (const auto& c : p.corners) {
    try {
      check_sphere_point(1, c);
    } catch (const Error& e) {
      return std::string("corner off the square boundary: ") + e.what();
    }
  }
  if (!is_monotone(p)) return "path is not monotone";
  for (std::size_t i = 1; i < p.corners.size(); ++i) {
    const SpherePoint a = snapped(p.corners[i - 1]), b = snapped(p.corners[i]);
    bool on_face = false;
    for (int d = 0; d < 2; ++d) on_face = on_face || (a[d] == b[d] && extremal(a[d]));
    if (!on_face) return "segment " + std::to_string(i) + " leaves the boundary";
  }
  return std::nullopt;
}

std::string SphereSpace::encode(const Point& p) const {
  std::string out;
  for (std::size_t d = 0; d < p.size(); ++d) {
    if (d) out += ",";
    out += format_double(p[d]);
  }
  return out;
}

SpherePoint parse_sphere_point(const std::string& text) {
  SpherePoint out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw Error(ErrorCode::InvalidInput, "bad coordinate '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw Error(ErrorCode::InvalidInput, "empty point");
  return out;
}

}  // namespace ditc
