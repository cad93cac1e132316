#include "ditc/core/error.hpp"
#include "ditc/graph/builtins.hpp"
#include "ditc/nathom/nathom.hpp"
#include "support/corpus.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
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

long long leibniz(const IntMatrix& m) {
  std::vector<int> perm(m.rows);
  std::iota(perm.begin(), perm.end(), 0);
  long long total = 0;
  do {
    long long term = 1;
    int inversions = 0;
    for (int i = 0; i < m.rows; ++i) {
      term *= m.at(i, perm[i]);
      for (int j = i + 1; j < m.rows; ++j) inversions += perm[i] > perm[j];
    }
    total += inversions % 2 ? -term : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

std::vector<GraphPoint> all_vertices(const DirectedGraph& g) {
  std::vector<GraphPoint> out;
  for (VertexId v = 0; v < g.num_vertices(); ++v) out.push_back(GraphPoint::vertex(v));
  return out;
}

/// Edge sequences name a trace only together with its endpoints, so the
/// target object disambiguates.
const NatMorphism* find_morphism(const NatDiagram& d, int from, int to, const EdgeSequence& alpha,
                                 const EdgeSequence& beta) {
  for (const auto& m : d.morphisms)
    if (m.from == from && m.to == to && m.alpha == alpha && m.beta == beta) return &m;
  return nullptr;
}

/// Composite of f then g is the extension by (alpha_g alpha_f, beta_f beta_g)
/// and its matrix is the product of the two matrices.
void check_functorial(const NatDiagram& d) {
  for (const auto& f : d.morphisms)
    for (const auto& g : d.morphisms) {
      if (g.from != f.to) continue;
      const NatObject& mid = d.objects[f.to];
      const EdgeSequence alpha = concat_traces(g.alpha, f.alpha, d.samples[mid.source]);
      const EdgeSequence beta = concat_traces(f.beta, g.beta, d.samples[mid.target]);
      const NatMorphism* h = find_morphism(d, f.from, g.to, alpha, beta);
      REQUIRE(h != nullptr);
      CHECK(h->matrix == g.matrix * f.matrix);
    }
}

/// Every morphism sends basis classes to distinct basis classes.
void check_basis_permanence(const NatDiagram& d) {
  for (const auto& m : d.morphisms) {
    std::vector<int> image;
    for (int c = 0; c < m.matrix.cols; ++c) {
      int ones = 0, where = -1;
      for (int r = 0; r < m.matrix.rows; ++r) {
        CHECK((m.matrix.at(r, c) == 0 || m.matrix.at(r, c) == 1));
        if (m.matrix.at(r, c) == 1) ++ones, where = r;
      }
      CHECK(ones == 1);
      image.push_back(where);
    }
    std::sort(image.begin(), image.end());
    CHECK(std::adjacent_find(image.begin(), image.end()) == image.end());
  }
}

}  // namespace

TEST_CASE("determinants") {
  CHECK(determinant({2, 2, {2, 1, 1, 1}}) == 1);
  CHECK(determinant({2, 2, {0, 1, 1, 0}}) == -1);
  CHECK(determinant({2, 2, {1, 1, 1, 1}}) == 0);
  CHECK(determinant({3, 3, {0, 0, 1, 0, 1, 0, 1, 0, 0}}) == -1);
  CHECK(determinant(IntMatrix::identity(5)) == 1);
  CHECK(determinant(IntMatrix::zero(0, 0)) == 1);
  CHECK(throws_code(ErrorCode::NotIso, [] { determinant(IntMatrix::zero(2, 3)); }));
  std::mt19937_64 rng(53);
  std::uniform_int_distribution<int> entry(-3, 3), size(1, 5);
  for (int i = 0; i < 300; ++i) {
    const int n = size(rng);
    IntMatrix m = IntMatrix::zero(n, n);
    for (auto& v : m.data) v = entry(rng);
    CHECK(determinant(m) == leibniz(m));
  }
  CHECK(throws_code(ErrorCode::DimensionMismatch, [] { IntMatrix::zero(2, 3) * IntMatrix::zero(2, 3); }));
}

TEST_CASE("circle diagram on its endpoints") {
  const auto circle = directed_circle();
  const NatDiagram d = factorization_diagram(circle.graph, all_vertices(circle.graph));
  REQUIRE(d.objects.size() == 4);
  const int bb = d.object_index("v:b->v:b []");
  const int ee = d.object_index("v:e->v:e []");
  const int top = d.object_index("v:b->v:e [top]");
  const int bottom = d.object_index("v:b->v:e [bottom]");
  REQUIRE(bb >= 0);
  REQUIRE(ee >= 0);
  REQUIRE(top >= 0);
  REQUIRE(bottom >= 0);
  CHECK(d.objects[bb].rank == 1);
  CHECK(d.objects[ee].rank == 1);
  CHECK(d.objects[top].rank == 2);
  CHECK(d.objects[bottom].rank == 2);

  // extending the constant at b by the top edge sends the generator to [top]
  const NatMorphism* m = find_morphism(d, bb, top, {}, {0});
  REQUIRE(m != nullptr);
  const auto& basis = d.objects[top].basis;
  const int at = static_cast<int>(std::find(basis.begin(), basis.end(), EdgeSequence{0}) - basis.begin());
  IntMatrix expected = IntMatrix::zero(2, 1);
  expected.at(at, 0) = 1;
  CHECK(m->matrix == expected);

  const NatMorphism* id = find_morphism(d, top, top, {}, {});
  REQUIRE(id != nullptr);
  CHECK(id->matrix == IntMatrix::identity(2));

  check_functorial(d);
  check_basis_permanence(d);
  const PointCheck pc = is_bisimilar_to_point(d);
  CHECK_FALSE(pc.bisimilar);
  CHECK(pc.reason.find("rank 2") != std::string::npos);

  const auto j = d.to_json();
  CHECK(j["objects"].size() == 4);
  CHECK(j["morphisms"].size() == d.morphisms.size());
  CHECK(d.to_dot().rfind("digraph", 0) == 0);
}

TEST_CASE("interval diagram is bisimilar to a point") {
  const auto interval = directed_interval();
  const NatDiagram d =
      factorization_diagram(interval.graph, {GraphPoint::vertex(0), GraphPoint::interior(0, 0.5), GraphPoint::vertex(1)});
  CHECK(d.objects.size() == 6);
  for (const auto& o : d.objects) CHECK(o.rank == 1);
  check_functorial(d);
  const PointCheck pc = is_bisimilar_to_point(d);
  CHECK(pc.bisimilar);
  CHECK(pc.relation.size() == d.objects.size());
  CHECK(check_bisimulation(d, terminal_diagram(), pc.relation));
}

TEST_CASE("infinite trace spaces are rejected") {
  const auto loop = directed_loop();
  CHECK(throws_code(ErrorCode::InfiniteTraceSpace, [&] { factorization_diagram(loop.graph, {GraphPoint::vertex(0)}); }));
  const auto c3 = cycle_graph(3);
  CHECK(throws_code(ErrorCode::InfiniteTraceSpace,
                    [&] { factorization_diagram(c3.graph, {GraphPoint::vertex(0), GraphPoint::vertex(1)}); }));
}

TEST_CASE("higher homology") {
  const auto circle = directed_circle();
  const NatDiagram d = factorization_diagram(circle.graph, all_vertices(circle.graph));
  const NatDiagram h1 = h_n(d, 1);
  CHECK(h1.objects.size() == d.objects.size());
  const NatDiagram h2 = h_n(d, 2);
  CHECK(h2.objects.size() == d.objects.size());
  CHECK(h2.morphisms.size() == d.morphisms.size());
  for (const auto& o : h2.objects) CHECK(o.rank == 0);
  CHECK(throws_code(ErrorCode::InvalidInput, [&] { h_n(d, 0); }));
}

TEST_CASE("bisimulation checking") {
  const auto circle = directed_circle();
  const NatDiagram d = factorization_diagram(circle.graph, all_vertices(circle.graph));

  std::vector<RelationEntry> identity;
  for (std::size_t i = 0; i < d.objects.size(); ++i)
    identity.push_back({static_cast<int>(i), IntMatrix::identity(d.objects[i].rank), static_cast<int>(i)});
  CHECK(check_bisimulation(d, d, identity));

  // the automorphism exchanging the two edges
  auto mirror = [](EdgeSequence s) {
    for (auto& e : s) e = 1 - e;
    return s;
  };
  std::vector<RelationEntry> swapped;
  for (std::size_t i = 0; i < d.objects.size(); ++i) {
    const NatObject& o = d.objects[i];
    int image = -1;
    for (std::size_t k = 0; k < d.objects.size(); ++k)
      if (d.objects[k].source == o.source && d.objects[k].target == o.target && d.objects[k].trace == mirror(o.trace))
        image = static_cast<int>(k);
    REQUIRE(image >= 0);
    IntMatrix p = IntMatrix::zero(o.rank, o.rank);
    for (int c = 0; c < o.rank; ++c)
      for (int r = 0; r < o.rank; ++r)
        if (d.objects[image].basis[r] == mirror(o.basis[c])) p.at(r, c) = 1;
    swapped.push_back({static_cast<int>(i), p, image});
  }
  CHECK(check_bisimulation(d, d, swapped));

  // the swap on objects with identity matrices does not commute
  std::vector<RelationEntry> wrong = swapped;
  for (auto& r : wrong) r.iso = IntMatrix::identity(r.iso.rows);
  CHECK_FALSE(check_bisimulation(d, d, wrong));

  // a relation that is not closed under extension
  const int bb = d.object_index("v:b->v:b []");
  CHECK_FALSE(check_bisimulation(d, d, {{bb, IntMatrix::identity(1), bb}}));

  const int top = d.object_index("v:b->v:e [top]");
  CHECK(throws_code(ErrorCode::NotIso, [&] { check_bisimulation(d, d, {{top, IntMatrix::identity(1), top}}); }));
  CHECK(throws_code(ErrorCode::NotIso, [&] { check_bisimulation(d, d, {{top, IntMatrix{2, 2, {1, 1, 1, 1}}, top}}); }));
  CHECK(throws_code(ErrorCode::NotIso, [&] { check_bisimulation(d, d, {{top, IntMatrix{2, 2, {2, 0, 0, 1}}, top}}); }));
  CHECK(throws_code(ErrorCode::InvalidInput, [&] { check_bisimulation(d, d, {{99, IntMatrix::identity(1), 0}}); }));
}

TEST_CASE("diagrams of acyclic corpus graphs") {
  int built = 0;
  for (const auto& g : corpus(2024, 40)) {
    try {
      const NatDiagram d = factorization_diagram(g, all_vertices(g));
      const TraceCounter counter(g);
      for (const auto& o : d.objects)
        CHECK(static_cast<std::uint64_t>(o.rank) == counter.between(d.samples[o.source], d.samples[o.target]).count);
      check_functorial(d);
      check_basis_permanence(d);
      bool all_unique = true;
      for (const auto& o : d.objects) all_unique = all_unique && o.rank == 1;
      CHECK(is_bisimilar_to_point(d).bisimilar == all_unique);
      ++built;
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InfiniteTraceSpace);
    }
  }
  CHECK(built > 5);
}
