#include "ditc/core/error.hpp"
#include "ditc/core/testers.hpp"
#include "ditc/sphere/sphere.hpp"

#include <doctest.h>

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <thread>

using namespace ditc;

namespace {

bool throws_code(ErrorCode code, auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

bool on_boundary(const SpherePoint& p) {
  return std::any_of(p.begin(), p.end(), [](double c) { return c == 0.0 || c == 1.0; });
}

/// Reachability on the uniform lattice of step 1/steps by breadth-first
/// search, accepting a unit move when its midpoint lies on the boundary.
class LatticeReach {
public:
  LatticeReach(int dims, int steps) : dims_(dims), steps_(steps) {}

  std::vector<std::vector<int>> boundary_nodes() const {
    std::vector<std::vector<int>> out;
    std::vector<int> v(dims_, 0);
    while (true) {
      if (std::any_of(v.begin(), v.end(), [&](int c) { return c == 0 || c == steps_; })) out.push_back(v);
      int d = 0;
      while (d < dims_ && ++v[d] > steps_) v[d++] = 0;
      if (d == dims_) return out;
    }
  }

  std::map<std::vector<int>, bool> from(const std::vector<int>& src) const {
    std::map<std::vector<int>, bool> seen{{src, true}};
    std::deque<std::vector<int>> q{src};
    while (!q.empty()) {
      const auto v = q.front();
      q.pop_front();
      for (int d = 0; d < dims_; ++d) {
        if (v[d] == steps_) continue;
        SpherePoint mid = point(v);
        mid[d] += 0.5 / steps_;
        if (!on_boundary(mid)) continue;
        auto w = v;
        ++w[d];
        if (seen.emplace(w, true).second) q.push_back(w);
      }
    }
    return seen;
  }

  SpherePoint point(const std::vector<int>& v) const {
    SpherePoint p;
    for (int c : v) p.push_back(static_cast<double>(c) / steps_);
    return p;
  }

private:
  int dims_, steps_;
};

/// The square's boundary: x reaches y iff x <= y and both lie on one of the
/// two closed arcs from (0,0) to (1,1).
bool square_reach(const SpherePoint& x, const SpherePoint& y) {
  if (x[0] > y[0] || x[1] > y[1]) return false;
  auto lower_right = [](const SpherePoint& p) { return p[1] == 0.0 || p[0] == 1.0; };
  auto upper_left = [](const SpherePoint& p) { return p[0] == 0.0 || p[1] == 1.0; };
  return (lower_right(x) && lower_right(y)) || (upper_left(x) && upper_left(y));
}

SpherePoint random_boundary_point(int n, std::mt19937_64& rng, int denominator) {
  std::uniform_int_distribution<int> axis(0, n), side(0, 1), level(0, denominator);
  SpherePoint p(n + 1);
  for (auto& c : p) c = static_cast<double>(level(rng)) / denominator;
  p[axis(rng)] = side(rng);
  return p;
}

}  // namespace

TEST_CASE("examples and argument checks") {
  CHECK_FALSE(sphere_gamma(1, {0, 0.5}, {1, 0.6}));
  CHECK(sphere_gamma(1, {0, 0.5}, {0.2, 1}));
  CHECK(sphere_gamma(1, {0, 0}, {1, 1}));
  CHECK(sphere_gamma(2, {0, 0.5, 0.5}, {1, 1, 0.7}));
  CHECK(sphere_gamma(2, {0.5, 0, 0.5}, {1, 0.5, 0.5}));
  CHECK_FALSE(sphere_gamma(2, {1, 0.5, 0.5}, {0.5, 1, 0.5}));
  CHECK(throws_code(ErrorCode::DimensionMismatch, [] { sphere_gamma(2, {0, 0}, {1, 1}); }));
  CHECK(throws_code(ErrorCode::InvalidInput, [] { sphere_gamma(1, {0.5, 0.5}, {1, 1}); }));
  CHECK(throws_code(ErrorCode::InvalidInput, [] { sphere_gamma(1, {0, 1.5}, {1, 1}); }));
  CHECK(throws_code(ErrorCode::InvalidInput, [] { SphereOracle(0); }));
  CHECK(parse_sphere_point("0,0.25,1") == SpherePoint{0, 0.25, 1});
  for (int n = 1; n <= 5; ++n) {
    const DiTCReport r = sphere_ditc(n);
    CHECK(r.lower == 2);
    CHECK(r.upper == 2);
    CHECK(r.reason == DiTCReason::KnownBuiltin);
  }
}

TEST_CASE("square boundary agrees with the arc description") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 3000; ++i) {
    const auto x = random_boundary_point(1, rng, 8), y = random_boundary_point(1, rng, 8);
    CHECK(sphere_gamma(1, x, y) == square_reach(x, y));
  }
}

TEST_CASE("agreement with the midpoint lattice search") {
  for (int n = 1; n <= 3; ++n) {
    const int steps = n == 3 ? 2 : 4;
    const LatticeReach lattice(n + 1, steps);
    const SphereOracle oracle(n, 16);
    const auto nodes = lattice.boundary_nodes();
    for (const auto& a : nodes) {
      const auto reach = lattice.from(a);
      for (const auto& b : nodes)
        CHECK(oracle.contains(lattice.point(a), lattice.point(b)) == reach.count(b) > 0);
    }
  }
}

TEST_CASE("structural properties") {
  std::mt19937_64 rng(37);
  for (int n = 1; n <= 4; ++n) {
    for (int i = 0; i < 400; ++i) {
      const auto x = random_boundary_point(n, rng, 10), y = random_boundary_point(n, rng, 10);
      const bool reach = sphere_gamma(n, x, y);
      if (share_face(x, y)) CHECK(reach);
      if (reach)
        for (int d = 0; d <= n; ++d) CHECK(x[d] <= y[d]);
      CHECK(sphere_gamma(n, x, x));
      CHECK(reach == sphere_gamma(n, x, y, 32));
      CHECK(reach == SphereOracle(n, 7).contains(x, y));
    }
  }
}

TEST_CASE("cache is consistent under concurrent queries") {
  const SphereOracle oracle(2, 16);
  std::mt19937_64 rng(41);
  std::vector<std::pair<SpherePoint, SpherePoint>> pairs;
  for (int i = 0; i < 200; ++i) pairs.emplace_back(random_boundary_point(2, rng, 6), random_boundary_point(2, rng, 6));
  std::vector<char> fresh;
  for (const auto& [x, y] : pairs) fresh.push_back(SphereOracle(2, 16).contains(x, y));
  std::vector<std::vector<char>> seen(4);
  std::vector<std::thread> workers;
  for (int t = 0; t < 4; ++t)
    workers.emplace_back([&, t] {
      for (int round = 0; round < 3; ++round)
        for (const auto& [x, y] : pairs) seen[t].push_back(oracle.contains(x, y));
    });
  for (auto& w : workers) w.join();
  for (const auto& s : seen)
    for (std::size_t i = 0; i < s.size(); ++i) CHECK(s[i] == fresh[i % pairs.size()]);
}

TEST_CASE("two-patch planner on the square") {
  const SpherePatchwork planner = sphere_planner();
  CHECK(planner.ids() == std::vector<std::string>{"I+", "I-"});
  CHECK(planner.ordered_regular);
  const SphereSpace space;
  const SectionReport s = check_section(planner, space, 2000, 43);
  CHECK(s.samples == 2000);
  CHECK(s.total_violations() == 0);
  for (const auto& id : planner.ids()) {
    const ContinuityReport c = check_patch_continuity(planner, space, id, 300, 0.01, 44);
    CHECK(c.tested > 0);
    CHECK(c.violations == 0);
  }
  CHECK(planner.plan({0, 0}, {1, 1}).first == 0);
  CHECK(planner.plan({0, 0.5}, {0.5, 1}).first == 1);
  const Polyline p = sphere_planner_1({0.5, 0}, {1, 0.5});
  CHECK(p.corners == std::vector<Coords>{{0.5, 0}, {1, 0}, {1, 0.5}});
  CHECK(is_monotone(p));
  CHECK(throws_code(ErrorCode::Unreachable, [] { sphere_planner_1({0, 0.5}, {1, 0.6}); }));
}
