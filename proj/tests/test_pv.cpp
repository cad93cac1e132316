#include "ditc/core/error.hpp"
#include "ditc/pv/pv.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

#include <random>

using namespace ditc;
using namespace ditc::testing;

namespace {

bool throws_code(ErrorCode code, auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

bool monotone(const std::vector<PlanePoint>& path) {
  for (std::size_t i = 1; i < path.size(); ++i)
    if (path[i][0] < path[i - 1][0] || path[i][1] < path[i - 1][1]) return false;
  return true;
}

bool avoids(const std::vector<Rect>& rects, const std::vector<PlanePoint>& path) {
  for (std::size_t i = 1; i < path.size(); ++i)
    for (const auto& r : rects)
      if (segment_hits(r, path[i - 1], path[i])) return false;
  return true;
}

}  // namespace

TEST_CASE("parsing") {
  const PVProgram p = parse_pv("Pa.Va.Pb.Vb|Pb.Vb");
  CHECK(p.length(0) == 4);
  CHECK(p.length(1) == 2);
  CHECK(p.processes[0][2].label() == "Pb");
  CHECK(p.processes[1][1].kind == PVKind::V);
  CHECK(p.to_string() == "Pa.Va.Pb.Vb|Pb.Vb");
  CHECK(parse_pv(" Pa . Va | Pa.Va ").to_string() == "Pa.Va|Pa.Va");
  CHECK(parse_pv("|Pa.Va").length(0) == 0);

  CHECK(throws_code(ErrorCode::SyntaxError, [] { parse_pv("Pa.Va"); }));
  CHECK(throws_code(ErrorCode::SyntaxError, [] { parse_pv("Pa.Xa|Pa.Va"); }));
  CHECK(throws_code(ErrorCode::SyntaxError, [] { parse_pv("Pa..Va|Pa.Va"); }));
  CHECK(throws_code(ErrorCode::SyntaxError, [] { parse_pv("P|Pa.Va"); }));
  CHECK(throws_code(ErrorCode::UnbalancedLocks, [] { parse_pv("Pa|Pa.Va"); }));
  CHECK(throws_code(ErrorCode::UnbalancedLocks, [] { parse_pv("Va.Pa|Pa.Va"); }));
  CHECK(throws_code(ErrorCode::UnbalancedLocks, [] { parse_pv("Pa.Pa.Va.Va|Pa.Va"); }));
}

TEST_CASE("forbidden rectangles") {
  CHECK(forbidden_regions(parse_pv("Pa.Va.Pa.Va|Pa.Va.Pa.Va")).size() == 4);
  CHECK(forbidden_regions(parse_pv("Pa.Va.Pb.Vb|Pa.Va.Pb.Vb")).size() == 2);
  CHECK(forbidden_regions(parse_pv("Pa.Va|Pb.Vb")).empty());
  const auto one = forbidden_regions(parse_pv("Pa.Va|Pa.Va"));
  REQUIRE(one.size() == 1);
  CHECK(one[0].lo == std::array<double, 2>{0.5, 0.5});
  CHECK(one[0].hi == std::array<double, 2>{1.5, 1.5});
  CHECK(one[0].semaphore == "a");
  CHECK(inside_open(one[0], {1.0, 1.0}));
  CHECK_FALSE(inside_open(one[0], {0.5, 1.0}));
  CHECK(segment_hits(one[0], {0.0, 1.0}, {2.0, 1.0}));
  CHECK_FALSE(segment_hits(one[0], {0.0, 1.5}, {2.0, 1.5}));
  CHECK_FALSE(segment_hits(one[0], {0.0, 0.0}, {0.5, 0.5}));
  CHECK(segment_hits(one[0], {0.0, 0.0}, {2.0, 2.0}));
}

TEST_CASE("gamma matches the state automaton") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const PVProgram prog = parse_pv(random_pv_program(rng));
    const PVAutomaton automaton(prog);
    const PVGamma gamma(prog, 4);
    const int n0 = prog.length(0), n1 = prog.length(1);
    for (int i0 = 0; i0 <= n0; ++i0)
      for (int j0 = 0; j0 <= n1; ++j0)
        for (int i1 = 0; i1 <= n0; ++i1)
          for (int j1 = 0; j1 <= n1; ++j1) {
            const PlanePoint x{double(i0), double(j0)}, y{double(i1), double(j1)};
            CHECK(gamma.contains(x, y) == automaton.reaches(i0, j0, i1, j1));
          }
  }
}

TEST_CASE("gamma is stable under grid refinement") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const PVProgram prog = parse_pv(random_pv_program(rng));
    const PVGamma coarse(prog, 2), fine(prog, 4);
    const int n0 = prog.length(0), n1 = prog.length(1);
    for (int a = 0; a <= 2 * n0; ++a)
      for (int b = 0; b <= 2 * n1; ++b)
        for (int c = a; c <= 2 * n0; ++c)
          for (int d = b; d <= 2 * n1; ++d) {
            const PlanePoint x{a / 2.0, b / 2.0}, y{c / 2.0, d / 2.0};
            CHECK(coarse.contains(x, y) == fine.contains(x, y));
          }
  }
}

TEST_CASE("gamma argument checks") {
  const PVProgram prog = parse_pv("Pa.Va|Pa.Va");
  CHECK(throws_code(ErrorCode::InvalidInput, [&] { PVGamma(prog, 1); }));
  const PVGamma g(prog, 4);
  CHECK(throws_code(ErrorCode::InvalidInput, [&] { g.contains({0.1, 0.0}, {1.0, 1.0}); }));
  CHECK(throws_code(ErrorCode::OutOfRange, [&] { g.contains({0.0, 0.0}, {3.0, 1.0}); }));
  CHECK_FALSE(g.contains({1.0, 1.0}, {2.0, 2.0}));
  CHECK_FALSE(g.contains({2.0, 0.0}, {0.0, 2.0}));
  CHECK(g.contains({0.0, 0.0}, {2.0, 2.0}));
}

TEST_CASE("schedules of random programs") {
  std::mt19937_64 rng(29);
  int scheduled = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const PVProgram prog = parse_pv(random_pv_program(rng));
    const PVAutomaton automaton(prog);
    const int n0 = prog.length(0), n1 = prog.length(1);
    for (int i0 = 0; i0 <= n0; ++i0)
      for (int j0 = 0; j0 <= n1; ++j0) {
        const PlanePoint x{double(i0), double(j0)}, y{double(n0), double(n1)};
        if (!automaton.reaches(i0, j0, n0, n1)) {
          if (automaton.legal(i0, j0))
            CHECK(throws_code(ErrorCode::Unreachable, [&] { schedule(prog, x, y, 4); }));
          continue;
        }
        const Schedule s = schedule(prog, x, y, 4);
        REQUIRE_FALSE(s.path.empty());
        CHECK(s.path.front() == x);
        CHECK(s.path.back() == y);
        CHECK(monotone(s.path));
        CHECK(avoids(forbidden_regions(prog), s.path));
        CHECK(s.interleaving.size() == static_cast<std::size_t>(n0 - i0 + n1 - j0));
        CHECK(replay_respects_mutex(prog, s.interleaving, i0, j0));
        CHECK(s.interleaving == interleaving_of(prog, s.path));
        ++scheduled;
      }
  }
  CHECK(scheduled > 300);
}

TEST_CASE("schedule examples") {
  const PVProgram fig = parse_pv("Pa.Va.Pb.Vb|Pa.Va.Pb.Vb");
  const Schedule s = schedule(fig, {0, 0}, {4, 4}, 8);
  CHECK(replay_respects_mutex(fig, s.interleaving));
  CHECK(s.to_json()["path"].front() == nlohmann::json::array({0, 0}));
  CHECK(s.to_json()["interleaving"].size() == 8);

  const PVProgram deadlock = parse_pv("Pa.Pb.Vb.Va|Pb.Pa.Va.Vb");
  CHECK_NOTHROW(schedule(deadlock, {0, 0}, {4, 4}, 8));
  CHECK(throws_code(ErrorCode::Unreachable, [&] { schedule(deadlock, {1, 1}, {4, 4}, 8); }));

  const Schedule still = schedule(fig, {2, 1}, {2, 1}, 8);
  CHECK(still.interleaving.empty());
  CHECK(still.path.front() == still.path.back());

  // same-position actions: V before P, then process 1 before process 2
  const PVProgram two = parse_pv("Pa.Va|Pb.Vb");
  CHECK(interleaving_of(two, {{0, 0}, {2, 2}}) == std::vector<std::string>{"1:Pa", "2:Pb", "1:Va", "2:Vb"});
  CHECK(interleaving_of(fig, {{0, 0}, {1, 0}, {1, 1}}) == std::vector<std::string>{"1:Pa", "2:Pa"});
}

TEST_CASE("region output") {
  const PVProgram prog = parse_pv("Pa.Va|Pa.Va");
  const auto j = regions_to_json(forbidden_regions(prog));
  REQUIRE(j.size() == 1);
  CHECK(j[0]["semaphore"] == "a");
  const std::string svg = regions_to_svg(prog, forbidden_regions(prog));
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("<rect") != std::string::npos);
}
