#pragma once

#include "ditc/core/digraph.hpp"

#include <vector>

namespace ditc {

/// Membership test for the reachability relation of a graph d-space.
/// Built from the reflexive-transitive closure of the vertex relation; the
/// edge-interior cases are read off that table, which makes the interior-point
/// property hold by construction.
class GammaOracle {
public:
  explicit GammaOracle(const DirectedGraph& g);

  bool contains(const GraphPoint& x, const GraphPoint& y) const;
  bool reaches(VertexId from, VertexId to) const { return reach_[from][to] != 0; }

  const DirectedGraph& graph() const { return graph_; }

private:
  DirectedGraph graph_;
  std::vector<std::vector<char>> reach_;
};

GammaOracle gamma(const DirectedGraph& g);

/// Γ = X×X; for graphs this reduces to every ordered vertex pair being reachable.
bool is_strongly_connected_dspace(const DirectedGraph& g);

/// |E| - |V| + number of connected components.
int betti1(const DirectedGraph& g);

/// min(b1, 2) + 1; throws NotConnected for disconnected (or empty) graphs.
int classical_tc_graph(const DirectedGraph& g);

/// Every edge u->v replaced by u->m_<id>->v (edges <id>.0 and <id>.1).
DirectedGraph subdivide(const DirectedGraph& g);

}  // namespace ditc
