#pragma once

// Brute-force reference implementations, written independently of the
// library code they are compared against.

#include "ditc/core/digraph.hpp"
#include "ditc/pv/pv.hpp"

#include <cmath>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ditc::testing {

/// Reachability on the graph with every edge cut into `pieces` unit steps.
class SubdividedReach {
public:
  explicit SubdividedReach(const DirectedGraph& g, int pieces = 32) : g_(g), pieces_(pieces) {
    const int nodes = g.num_vertices() + g.num_edges() * (pieces - 1);
    next_.assign(nodes, {});
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      int prev = g.edge(e).src;
      for (int k = 1; k < pieces; ++k) {
        const int node = interior(e, k);
        next_[prev].push_back(node);
        prev = node;
      }
      next_[prev].push_back(g.edge(e).dst);
    }
    reach_.assign(nodes, std::vector<char>(nodes, 0));
    for (int s = 0; s < nodes; ++s) {
      std::deque<int> q{s};
      reach_[s][s] = 1;
      while (!q.empty()) {
        const int u = q.front();
        q.pop_front();
        for (int w : next_[u])
          if (!reach_[s][w]) {
            reach_[s][w] = 1;
            q.push_back(w);
          }
      }
    }
  }

  /// Node of a vertex, or of an interior point whose parameter is k/pieces.
  int node(const GraphPoint& p) const {
    if (p.is_vertex()) return p.index;
    const int k = static_cast<int>(std::lround(p.t * pieces_));
    return interior(p.index, k);
  }

  bool reaches(const GraphPoint& x, const GraphPoint& y) const { return reach_[node(x)][node(y)] != 0; }

private:
  int interior(EdgeId e, int k) const { return g_.num_vertices() + e * (pieces_ - 1) + (k - 1); }

  const DirectedGraph& g_;
  int pieces_;
  std::vector<std::vector<int>> next_;
  std::vector<std::vector<char>> reach_;
};

/// Number of distinct edge sequences of dipaths from x to y, by explicit walk
/// enumeration; nullopt when the count is infinite. Exponential: keep graphs small.
inline std::optional<long long> brute_trace_count(const DirectedGraph& g, const GraphPoint& x, const GraphPoint& y) {
  const int n = g.num_vertices();
  const int limit = 2 * n + 2;
  long long count = 0;
  bool long_walk = false;

  if (x.is_interior() && y.is_interior() && x.index == y.index && x.t <= y.t + 1e-12) ++count;
  if (x.is_vertex() && y.is_vertex() && x.index == y.index) ++count;  // constant path
  if (x.is_interior() && y.is_vertex() && g.edge(x.index).dst == y.index) ++count;
  if (x.is_vertex() && y.is_interior() && g.edge(y.index).src == x.index) ++count;
  if (x.is_interior() && y.is_interior() && g.edge(x.index).dst == g.edge(y.index).src) ++count;

  // walks of at least one full edge between the two anchor vertices
  const VertexId start = x.is_vertex() ? x.index : g.edge(x.index).dst;
  const VertexId stop = y.is_vertex() ? y.index : g.edge(y.index).src;
  auto dfs = [&](auto&& self, VertexId at, int depth) -> void {
    if (depth > 0 && at == stop) {
      ++count;
      if (depth > n) long_walk = true;
    }
    if (depth == limit) return;
    for (const auto& e : g.edges())
      if (e.src == at) self(self, e.dst, depth + 1);
  };
  dfs(dfs, start, 0);
  if (long_walk) return std::nullopt;
  return count;
}

/// Step-aligned reachability of a PV program through its product automaton:
/// state (i,j) = actions executed per process; a state is legal when no
/// semaphore is held by both processes.
class PVAutomaton {
public:
  explicit PVAutomaton(const PVProgram& prog) : prog_(prog) {}

  bool holds(int process, int executed, const std::string& sem) const {
    bool held = false;
    for (int k = 0; k < executed; ++k) {
      const auto& a = prog_.processes[process][k];
      if (a.semaphore == sem) held = a.kind == PVKind::P;
    }
    return held;
  }

  bool legal(int i, int j) const {
    for (int k = 0; k < prog_.length(0); ++k) {
      const auto& sem = prog_.processes[0][k].semaphore;
      if (holds(0, i, sem) && holds(1, j, sem)) return false;
    }
    return true;
  }

  bool reaches(int i0, int j0, int i1, int j1) const {
    if (!legal(i0, j0) || !legal(i1, j1) || i0 > i1 || j0 > j1) return false;
    std::vector<std::vector<char>> seen(i1 + 1, std::vector<char>(j1 + 1, 0));
    std::deque<std::pair<int, int>> q{{i0, j0}};
    seen[i0][j0] = 1;
    while (!q.empty()) {
      const auto [i, j] = q.front();
      q.pop_front();
      if (i == i1 && j == j1) return true;
      if (i < i1 && !seen[i + 1][j] && legal(i + 1, j)) {
        seen[i + 1][j] = 1;
        q.push_back({i + 1, j});
      }
      if (j < j1 && !seen[i][j + 1] && legal(i, j + 1)) {
        seen[i][j + 1] = 1;
        q.push_back({i, j + 1});
      }
    }
    return false;
  }

private:
  PVProgram prog_;
};

/// Replays an interleaving ("1:Pa", ...) from the given executed-action counts;
/// false when a semaphore would be held twice or an action is out of order.
inline bool replay_respects_mutex(const PVProgram& prog, const std::vector<std::string>& interleaving, int i0 = 0, int j0 = 0) {
  int pos[2] = {i0, j0};
  std::map<std::string, int> holders;
  for (int p = 0; p < 2; ++p)
    for (int k = 0; k < pos[p]; ++k) {
      const auto& a = prog.processes[p][k];
      holders[a.semaphore] += a.kind == PVKind::P ? 1 : -1;
    }
  for (const auto& [sem, c] : holders)
    if (c > 1) return false;
  for (const auto& ev : interleaving) {
    const int p = ev[0] - '1';
    if (pos[p] >= prog.length(p)) return false;
    const auto& a = prog.processes[p][pos[p]];
    if (ev.substr(2) != a.label()) return false;
    ++pos[p];
    int& c = holders[a.semaphore];
    c += a.kind == PVKind::P ? 1 : -1;
    if (c > 1 || c < 0) return false;
  }
  return true;
}

}  // namespace ditc::testing
