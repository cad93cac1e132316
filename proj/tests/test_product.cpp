#include "ditc/core/error.hpp"
#include "ditc/core/testers.hpp"
#include "ditc/graph/builtins.hpp"
#include "ditc/graph/planner.hpp"
#include "ditc/product/product.hpp"

#include <doctest.h>

#include <random>

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

ProductFactor factor(BuiltinGraph b) { return {std::move(b.graph), std::move(b.planner)}; }

}  // namespace

TEST_CASE("torus planners have n+1 patches") {
  for (int n = 1; n <= 4; ++n) {
    const TorusPlanner t = torus_planner(n);
    CHECK(t.planner.size() == static_cast<std::size_t>(n + 1));
    CHECK(t.report.lower == n + 1);
    CHECK(t.report.upper == n + 1);
    CHECK(t.report.exact);
    CHECK(t.report.reason == DiTCReason::KnownBuiltin);
    CHECK(t.planner.ordered_regular);
    std::vector<std::string> ids;
    for (int j = 0; j <= n; ++j) ids.push_back("G" + std::to_string(j));
    CHECK(t.planner.ids() == ids);
  }
  CHECK(throws_code(ErrorCode::InvalidInput, [] { torus_planner(0); }));
}

TEST_CASE("torus patch index counts off-diagonal coordinates") {
  std::mt19937_64 rng(3);
  for (int n = 1; n <= 4; ++n) {
    const TorusPlanner t = torus_planner(n);
    const ProductSpace space(t.factors);
    for (int i = 0; i < 300; ++i) {
      const auto x = space.sample(rng);
      auto y = space.sample(rng);
      std::bernoulli_distribution keep(0.4);
      for (int k = 0; k < n; ++k)
        if (keep(rng)) y[k] = x[k];
      int off = 0;
      for (int k = 0; k < n; ++k) off += !ditc::same_point(x[k], y[k]);
      const auto owners = t.planner.claimants(x, y);
      REQUIRE(owners.size() == 1);
      CHECK(owners.front() == static_cast<std::size_t>(off));
    }
  }
}

TEST_CASE("torus query from the command line example") {
  const TorusPlanner t = torus_planner(2);
  const auto x = parse_torus_point(2, "0,0");
  const auto y = parse_torus_point(2, "0.25,0.5");
  const auto [i, path] = t.planner.plan(x, y);
  CHECK(t.planner.patches[i].id == "G2");
  const ProductSpace space(t.factors);
  CHECK(space.same_point(space.end(path), y));
  const auto z = parse_torus_point(2, "0.25,0");
  CHECK(t.planner.patches[t.planner.plan(x, z).first].id == "G1");
  CHECK(t.planner.patches[t.planner.plan(x, x).first].id == "G0");

  CHECK(format_torus_point(parse_torus_point(2, "1.25,-0.5")) == format_torus_point(parse_torus_point(2, "0.25,0.5")));
  CHECK(throws_code(ErrorCode::DimensionMismatch, [] { parse_torus_point(3, "0.1,0.2"); }));
  CHECK(throws_code(ErrorCode::InvalidInput, [] { parse_torus_point(2, "0.1,x"); }));
}

TEST_CASE("product gamma is componentwise") {
  const std::vector<ProductFactor> factors{factor(directed_circle()), factor(directed_interval())};
  const ProductGamma gamma = product_gamma(factors);
  CHECK(gamma.dimension() == 2);
  const GraphPoint b = GraphPoint::vertex(0), e = GraphPoint::vertex(1);
  const GraphPoint top = GraphPoint::interior(0, 0.5), bottom = GraphPoint::interior(1, 0.5);
  const GraphPoint lo = GraphPoint::interior(0, 0.2), hi = GraphPoint::interior(0, 0.8);
  CHECK(gamma.contains({b, lo}, {e, hi}));
  CHECK(gamma.contains({top, lo}, {e, lo}));
  CHECK_FALSE(gamma.contains({top, lo}, {bottom, hi}));
  CHECK_FALSE(gamma.contains({b, hi}, {e, lo}));
  CHECK(throws_code(ErrorCode::DimensionMismatch, [&] { gamma.contains({b}, {e}); }));
  CHECK(throws_code(ErrorCode::InvalidInput, [] { product_gamma({}); }));

  std::mt19937_64 rng(8);
  const ProductSpace space(factors);
  for (int i = 0; i < 2000; ++i) {
    const auto x = space.sample(rng), y = space.sample(rng);
    const bool expected = space.factor(0).in_gamma(x[0], y[0]) && space.factor(1).in_gamma(x[1], y[1]);
    CHECK(gamma.contains(x, y) == expected);
  }
}

TEST_CASE("product planner requires regular factors") {
  const auto fig = figure_eight();
  REQUIRE_FALSE(fig.planner.ordered_regular);
  const std::vector<ProductFactor> bad{factor(directed_loop()), {fig.graph, fig.planner}};
  CHECK(throws_code(ErrorCode::NotRegular, [&] { product_planner(bad); }));
}

TEST_CASE("product planners pass the section and continuity checks") {
  const std::vector<std::vector<ProductFactor>> products{
      {factor(directed_circle()), factor(directed_interval())},
      {factor(directed_circle()), factor(directed_circle())},
      torus_planner(2).factors,
      torus_planner(3).factors,
  };
  for (const auto& factors : products) {
    const ProductPatchwork planner = product_planner(factors);
    const ProductSpace space(factors);
    const SectionReport s = check_section(planner, space, 500, 21);
    CHECK(s.samples == 500);
    CHECK(s.total_violations() == 0);
    for (const auto& p : planner.patches) {
      const ContinuityReport c = check_patch_continuity(planner, space, p.id, 100, 0.01, 22);
      CHECK(c.violations == 0);
    }
  }
}

TEST_CASE("torus sections stay synchronized") {
  const TorusPlanner t = torus_planner(2);
  const ProductSpace space(t.factors);
  const auto x = parse_torus_point(2, "0.5,0.1");
  const auto y = parse_torus_point(2, "0.25,0.3");
  const auto path = t.planner.plan(x, y).second;
  REQUIRE(path.size() == 2);
  // coordinate 0 runs three quarters of a turn, coordinate 1 a fifth, both over [0,1]
  const auto mid = space.evaluate(path, 0.5);
  CHECK(ditc::same_point(mid[0], GraphPoint::interior(0, 0.875)));
  CHECK(ditc::same_point(mid[1], GraphPoint::interior(0, 0.2)));
}
