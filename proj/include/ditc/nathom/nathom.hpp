#pragma once

#include "ditc/graph/traces.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace ditc {

/// Integer matrix acting on column vectors: rows = rank of the target group.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<long long> data;  // row-major

  static IntMatrix zero(int rows, int cols) { return {rows, cols, std::vector<long long>(std::size_t(rows) * cols, 0)}; }
  static IntMatrix identity(int n);
  long long& at(int r, int c) { return data[std::size_t(r) * cols + c]; }
  long long at(int r, int c) const { return data[std::size_t(r) * cols + c]; }
  bool operator==(const IntMatrix&) const = default;
  nlohmann::json to_json() const;
};

/// Throws DimensionMismatch unless a.cols == b.rows.
IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

/// An object of the sampled factorization category: a trace between two
/// sample points, carrying H0 of the trace space between those points, i.e.
/// the free abelian group on its trace classes.
struct NatObject {
  std::string id;
  int source = 0;  // index into NatDiagram::samples
  int target = 0;
  EdgeSequence trace;
  int rank = 0;
  std::vector<EdgeSequence> basis;
};

/// Extension of an object by a pair of traces (alpha before, beta after).
struct NatMorphism {
  int from = 0;
  int to = 0;
  EdgeSequence alpha;
  EdgeSequence beta;
  IntMatrix matrix;
};

struct NatDiagram {
  DirectedGraph graph;
  std::vector<GraphPoint> samples;
  std::vector<NatObject> objects;
  std::vector<NatMorphism> morphisms;

  int object_index(const std::string& id) const;  // -1 when absent
  nlohmann::json to_json() const;
  std::string to_dot() const;
};

/// Objects are all trace classes between ordered sample pairs of Γ; morphisms
/// are all extensions by sample-to-sample traces, acting by concatenation.
/// Throws InfiniteTraceSpace when a directed cycle fits between two samples.
NatDiagram factorization_diagram(const DirectedGraph& g, const std::vector<GraphPoint>& samples);

/// n = 1: H0, the diagram itself. n >= 2: same shape with zero groups (trace
/// spaces of graphs are homotopy discrete). Throws InvalidInput for n < 1.
NatDiagram h_n(const NatDiagram& diagram, int n);

/// The constant diagram Z on one object with the identity morphism.
NatDiagram terminal_diagram();

struct RelationEntry {
  int left = 0;
  IntMatrix iso;
  int right = 0;
};

struct PointCheck {
  bool bisimilar = false;
  std::vector<RelationEntry> relation;  // to terminal_diagram(), when bisimilar
  std::string reason;                   // first offending object or morphism otherwise
};

/// Every group of rank 1 and every morphism an isomorphism (±1).
PointCheck is_bisimilar_to_point(const NatDiagram& diagram);

/// Verifies both heredity clauses of a supplied relation, reading commutation
/// strictly. Throws NotIso when a listed matrix is not invertible over Z.
bool check_bisimulation(const NatDiagram& d1, const NatDiagram& d2, const std::vector<RelationEntry>& relation);

/// Determinant by fraction-free elimination; throws NotIso for non-square input.
long long determinant(const IntMatrix& m);

}  // namespace ditc
