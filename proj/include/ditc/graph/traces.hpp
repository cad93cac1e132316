#pragma once

#include "ditc/core/dipath.hpp"
#include "ditc/graph/gamma.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ditc {

/// A trace class on a graph, identified with its reduced edge sequence: the
/// edges whose closures the path runs through, in order, with a mid-edge
/// stop-and-go counted once. A constant path at a vertex is the empty
/// sequence; a constant path inside edge e is {e}.
using EdgeSequence = std::vector<EdgeId>;

struct TraceCount {
  bool infinite = false;
  std::uint64_t count = 0;

  bool unique() const { return !infinite && count == 1; }
  bool multiple() const { return infinite || count > 1; }
};

struct TraceClassSummary {
  TraceCount count;
  std::vector<EdgeSequence> representatives;
};

/// Trace-class counts for every pair of points, precomputed per vertex pair.
class TraceCounter {
public:
  explicit TraceCounter(const DirectedGraph& g);

  TraceCount between_vertices(VertexId from, VertexId to) const;
  TraceCount between(const GraphPoint& x, const GraphPoint& y) const;

  bool on_cycle(VertexId v) const { return on_cycle_[v] != 0; }
  const GammaOracle& oracle() const { return oracle_; }

private:
  std::uint64_t fill_count(VertexId from, VertexId to);

  GammaOracle oracle_;
  std::vector<char> on_cycle_;
  std::vector<std::vector<char>> infinite_;
  std::vector<std::vector<std::int64_t>> counts_;
};

/// Distinct trace classes from x to y, at most `cutoff` representatives in
/// order of increasing length (ties by edge id order).
TraceClassSummary traces_between(const DirectedGraph& g, const GraphPoint& x, const GraphPoint& y, int cutoff = 16);

/// Concatenation of trace classes meeting at `junction`.
EdgeSequence concat_traces(const EdgeSequence& a, const EdgeSequence& b, const GraphPoint& junction);

/// The DiPath that realizes a trace class from x to y.
DiPath realize_trace(const DirectedGraph& g, const GraphPoint& x, const GraphPoint& y, const EdgeSequence& seq);

std::string format_trace(const DirectedGraph& g, const EdgeSequence& seq);

}  // namespace ditc
