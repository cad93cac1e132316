#include "ditc/nathom/nathom.hpp"

#include "ditc/core/error.hpp"

#include <cstdlib>
#include <map>
#include <sstream>
#include <tuple>

namespace ditc {

namespace {
constexpr std::uint64_t kMaxClasses = 4096;
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m = zero(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

nlohmann::json IntMatrix::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (int r = 0; r < rows; ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < cols; ++c) row.push_back(at(r, c));
    out.push_back(row);
  }
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols != b.rows) throw Error(ErrorCode::DimensionMismatch, "matrix shapes do not compose");
  IntMatrix out = IntMatrix::zero(a.rows, b.cols);
  for (int r = 0; r < a.rows; ++r)
    for (int k = 0; k < a.cols; ++k) {
      const long long v = a.at(r, k);
      if (v == 0) continue;
      for (int c = 0; c < b.cols; ++c) out.at(r, c) += v * b.at(k, c);
    }
  return out;
}

long long determinant(const IntMatrix& m) {
  if (m.rows != m.cols) throw Error(ErrorCode::NotIso, "matrix is not square");
  const int n = m.rows;
  if (n == 0) return 1;
  IntMatrix a = m;
  long long sign = 1, prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a.at(k, k) == 0) {
      int swap = k + 1;
      while (swap < n && a.at(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (int c = 0; c < n; ++c) std::swap(a.at(k, c), a.at(swap, c));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

int NatDiagram::object_index(const std::string& id) const {
  for (std::size_t i = 0; i < objects.size(); ++i)
    if (objects[i].id == id) return static_cast<int>(i);
  return -1;
}

nlohmann::json NatDiagram::to_json() const {
  nlohmann::json objs = nlohmann::json::array();
  for (const auto& o : objects) {
    nlohmann::json basis = nlohmann::json::array();
    for (const auto& b : o.basis) basis.push_back(format_trace(graph, b));
    objs.push_back({{"id", o.id},
                    {"source", encode_point(graph, samples[o.source])},
                    {"target", encode_point(graph, samples[o.target])},
                    {"trace", format_trace(graph, o.trace)},
                    {"rank", o.rank},
                    {"basis", basis}});
  }
  nlohmann::json morphs = nlohmann::json::array();
  for (const auto& m : morphisms)
    morphs.push_back({{"from", objects[m.from].id},
                      {"to", objects[m.to].id},
                      {"alpha", format_trace(graph, m.alpha)},
                      {"beta", format_trace(graph, m.beta)},
                      {"matrix", m.matrix.to_json()}});
  return {{"objects", objs}, {"morphisms", morphs}};
}

std::string NatDiagram::to_dot() const {
  std::ostringstream out;
  out << "digraph NatH {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < objects.size(); ++i)
    out << "  o" << i << " [label=\"" << objects[i].id << "\\nZ^" << objects[i].rank << "\"];\n";
  for (const auto& m : morphisms) {
    if (m.from == m.to) continue;
    out << "  o" << m.from << " -> o" << m.to << ";\n";
  }
  out << "}\n";
  return out.str();
}

NatDiagram factorization_diagram(const DirectedGraph& g, const std::vector<GraphPoint>& samples) {
  NatDiagram d;
  d.graph = g;
  d.samples = samples;
  for (const auto& s : samples) check_point(g, s);
  const int n = static_cast<int>(samples.size());
  const TraceCounter counter(g);

  std::vector<std::vector<std::vector<EdgeSequence>>> classes(n, std::vector<std::vector<EdgeSequence>>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const TraceCount c = counter.between(samples[i], samples[j]);
      if (c.infinite)
        throw Error(ErrorCode::InfiniteTraceSpace, "infinitely many traces from " + encode_point(g, samples[i]) + " to " +
                                                       encode_point(g, samples[j]));
      if (c.count == 0) continue;
      if (c.count > kMaxClasses) throw Error(ErrorCode::InvalidInput, "too many trace classes between two samples");
      classes[i][j] = traces_between(g, samples[i], samples[j], static_cast<int>(c.count)).representatives;
    }

  std::map<std::tuple<int, int, EdgeSequence>, int> lookup;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (const auto& c : classes[i][j]) {
        NatObject o;
        o.id = encode_point(g, samples[i]) + "->" + encode_point(g, samples[j]) + " " + format_trace(g, c);
        o.source = i;
        o.target = j;
        o.trace = c;
        o.rank = static_cast<int>(classes[i][j].size());
        o.basis = classes[i][j];
        lookup[{i, j, c}] = static_cast<int>(d.objects.size());
        d.objects.push_back(std::move(o));
      }

  auto extend = [&](const EdgeSequence& alpha, const EdgeSequence& p, const EdgeSequence& beta, int i, int j) {
    return concat_traces(concat_traces(alpha, p, samples[i]), beta, samples[j]);
  };
  auto basis_index = [&](int k, int l, const EdgeSequence& seq) {
    const auto& b = classes[k][l];
    for (std::size_t r = 0; r < b.size(); ++r)
      if (b[r] == seq) return static_cast<int>(r);
    throw Error(ErrorCode::InvalidInput, "extended trace " + format_trace(g, seq) + " is not a listed class");
  };

  for (int from = 0; from < static_cast<int>(d.objects.size()); ++from) {
    const NatObject& o = d.objects[from];
    const int i = o.source, j = o.target;
    for (int k = 0; k < n; ++k)
      for (const auto& alpha : classes[k][i])
        for (int l = 0; l < n; ++l)
          for (const auto& beta : classes[j][l]) {
            NatMorphism m;
            m.from = from;
            m.to = lookup.at({k, l, extend(alpha, o.trace, beta, i, j)});
            m.alpha = alpha;
            m.beta = beta;
            m.matrix = IntMatrix::zero(static_cast<int>(classes[k][l].size()), o.rank);
            for (int c = 0; c < o.rank; ++c) m.matrix.at(basis_index(k, l, extend(alpha, o.basis[c], beta, i, j)), c) = 1;
            d.morphisms.push_back(std::move(m));
          }
  }
  return d;
}

NatDiagram h_n(const NatDiagram& diagram, int n) {
  if (n < 1) throw Error(ErrorCode::InvalidInput, "homology index must be at least 1");
  if (n == 1) return diagram;
  NatDiagram out = diagram;
  for (auto& o : out.objects) {
    o.rank = 0;
    o.basis.clear();
  }
  for (auto& m : out.morphisms) m.matrix = IntMatrix::zero(0, 0);
  return out;
}

NatDiagram terminal_diagram() {
  NatDiagram d;
  d.graph.add_vertex("*");
  d.samples.push_back(GraphPoint::vertex(0));
  NatObject o;
  o.id = "*";
  o.rank = 1;
  o.basis.push_back({});
  d.objects.push_back(o);
  d.morphisms.push_back({0, 0, {}, {}, IntMatrix::identity(1)});
  return d;
}

PointCheck is_bisimilar_to_point(const NatDiagram& diagram) {
  PointCheck out;
  for (const auto& o : diagram.objects)
    if (o.rank != 1) {
      out.reason = "object " + o.id + " has rank " + std::to_string(o.rank);
      return out;
    }
  for (const auto& m : diagram.morphisms)
    if (m.matrix.rows != 1 || m.matrix.cols != 1 || std::llabs(m.matrix.at(0, 0)) != 1) {
      out.reason = "morphism " + diagram.objects[m.from].id + " => " + diagram.objects[m.to].id + " is not invertible";
      return out;
    }
  for (std::size_t i = 0; i < diagram.objects.size(); ++i)
    out.relation.push_back({static_cast<int>(i), IntMatrix::identity(1), 0});
  out.bisimilar = check_bisimulation(diagram, terminal_diagram(), out.relation);
  if (!out.bisimilar) {
    out.relation.clear();
    out.reason = "signs of the morphisms admit no consistent identification with Z";
  }
  return out;
}

bool check_bisimulation(const NatDiagram& d1, const NatDiagram& d2, const std::vector<RelationEntry>& relation) {
  for (const auto& r : relation) {
    if (r.left < 0 || r.left >= static_cast<int>(d1.objects.size()) || r.right < 0 ||
        r.right >= static_cast<int>(d2.objects.size()))
      throw Error(ErrorCode::InvalidInput, "relation names a missing object");
    const int a = d1.objects[r.left].rank, b = d2.objects[r.right].rank;
    if (r.iso.rows != b || r.iso.cols != a || a != b)
      throw Error(ErrorCode::NotIso, "relation matrix does not fit the groups of " + d1.objects[r.left].id + " and " +
                                         d2.objects[r.right].id);
    if (std::llabs(determinant(r.iso)) != 1)
      throw Error(ErrorCode::NotIso, "relation matrix for " + d1.objects[r.left].id + " is not invertible over Z");
  }
  std::vector<std::vector<const NatMorphism*>> out1(d1.objects.size()), out2(d2.objects.size());
  for (const auto& m : d1.morphisms) out1[m.from].push_back(&m);
  for (const auto& m : d2.morphisms) out2[m.from].push_back(&m);

  auto closes = [&](const NatMorphism& f, const NatMorphism& g, const IntMatrix& phi) {
    for (const auto& r : relation)
      if (r.left == f.to && r.right == g.to && r.iso * f.matrix == g.matrix * phi) return true;
    return false;
  };
  for (const auto& r : relation) {
    for (const NatMorphism* f : out1[r.left]) {
      bool found = false;
      for (const NatMorphism* g : out2[r.right]) found = found || closes(*f, *g, r.iso);
      if (!found) return false;
    }
    for (const NatMorphism* g : out2[r.right]) {
      bool found = false;
      for (const NatMorphism* f : out1[r.left]) found = found || closes(*f, *g, r.iso);
      if (!found) return false;
    }
  }
  return true;
}

}  // namespace ditc
