#include "ditc/graph/traces.hpp"

#include <algorithm>
#include <deque>

namespace ditc {

namespace {
constexpr std::uint64_t kSaturated = std::uint64_t{1} << 62;
}

TraceCounter::TraceCounter(const DirectedGraph& g) : oracle_(g) {
  const int n = g.num_vertices();
  on_cycle_.assign(n, 0);
  for (const auto& e : g.edges())
    if (oracle_.reaches(e.dst, e.src)) on_cycle_[e.src] = 1;
  infinite_.assign(n, std::vector<char>(n, 0));
  for (VertexId u = 0; u < n; ++u)
    for (VertexId c = 0; c < n; ++c) {
      if (!on_cycle_[c] || !oracle_.reaches(u, c)) continue;
      for (VertexId w = 0; w < n; ++w)
        if (oracle_.reaches(c, w)) infinite_[u][w] = 1;
    }
  counts_.assign(n, std::vector<std::int64_t>(n, -1));
  for (VertexId u = 0; u < n; ++u)
    for (VertexId w = 0; w < n; ++w)
      if (oracle_.reaches(u, w) && !infinite_[u][w]) fill_count(u, w);
}

// no cycle vertex lies between the two, so the recursion runs over a DAG
std::uint64_t TraceCounter::fill_count(VertexId from, VertexId to) {
  auto& slot = counts_[from][to];
  if (slot >= 0) return static_cast<std::uint64_t>(slot);
  const auto& g = oracle_.graph();
  std::uint64_t total = from == to ? 1 : 0;
  for (EdgeId e : g.out_edges(from)) {
    const VertexId next = g.edge(e).dst;
    if (!oracle_.reaches(next, to)) continue;
    total = std::min(kSaturated, total + fill_count(next, to));
  }
  counts_[from][to] = static_cast<std::int64_t>(total);
  return total;
}

TraceCount TraceCounter::between_vertices(VertexId from, VertexId to) const {
  if (!oracle_.reaches(from, to)) return {false, 0};
  if (infinite_[from][to]) return {true, 0};
  return {false, static_cast<std::uint64_t>(counts_[from][to])};
}

TraceCount TraceCounter::between(const GraphPoint& x, const GraphPoint& y) const {
  if (!oracle_.contains(x, y)) return {false, 0};
  const auto& g = oracle_.graph();
  if (x.is_vertex() && y.is_vertex()) return between_vertices(x.index, y.index);
  if (x.is_vertex()) return between_vertices(x.index, g.edge(y.index).src);
  const Edge& ex = g.edge(x.index);
  if (y.is_vertex()) return between_vertices(ex.dst, y.index);
  const Edge& ey = g.edge(y.index);
  if (x.index != y.index) return between_vertices(ex.dst, ey.src);
  // same edge: any way back from dst to src closes a cycle through the edge
  const TraceCount around = between_vertices(ex.dst, ex.src);
  const bool can_loop = around.infinite || around.count > 0;
  if (x.t <= y.t || same_point(x, y)) return can_loop ? TraceCount{true, 0} : TraceCount{false, 1};
  return around;
}

TraceClassSummary traces_between(const DirectedGraph& g, const GraphPoint& x, const GraphPoint& y, int cutoff) {
  const TraceCounter counter(g);
  TraceClassSummary out;
  out.count = counter.between(x, y);
  if (!out.count.infinite && out.count.count == 0) return out;

  const GammaOracle& oracle = counter.oracle();
  const VertexId target = y.is_vertex() ? y.index : g.edge(y.index).src;

  struct Partial {
    VertexId at;
    EdgeSequence seq;
  };
  std::deque<Partial> frontier;
  auto emit = [&](EdgeSequence seq) {
    if (static_cast<int>(out.representatives.size()) < cutoff) out.representatives.push_back(std::move(seq));
  };

  if (x.is_interior()) {
    const Edge& ex = g.edge(x.index);
    if (y.is_interior() && y.index == x.index && (x.t <= y.t || same_point(x, y))) emit({x.index});
    frontier.push_back({ex.dst, {x.index}});
  } else {
    frontier.push_back({x.index, {}});
  }

  const std::size_t max_length = static_cast<std::size_t>(g.num_edges()) * (cutoff + 2) + 2;
  while (!frontier.empty() && static_cast<int>(out.representatives.size()) < cutoff) {
    Partial cur = std::move(frontier.front());
    frontier.pop_front();
    if (y.is_vertex() && cur.at == y.index) {
      // constant path at a vertex (x == y) is the empty sequence
      emit(cur.seq);
    } else if (y.is_interior() && cur.at == target) {
      EdgeSequence s = cur.seq;
      s.push_back(y.index);
      emit(std::move(s));
    }
    if (cur.seq.size() >= max_length) continue;
    for (EdgeId e : g.out_edges(cur.at)) {
      const VertexId next = g.edge(e).dst;
      if (!oracle.reaches(next, target)) continue;
      EdgeSequence s = cur.seq;
      s.push_back(e);
      frontier.push_back({next, std::move(s)});
    }
  }
  return out;
}

EdgeSequence concat_traces(const EdgeSequence& a, const EdgeSequence& b, const GraphPoint& junction) {
  EdgeSequence out = a;
  auto rest = b.begin();
  if (junction.is_interior() && !out.empty() && rest != b.end() && *rest == out.back()) ++rest;
  out.insert(out.end(), rest, b.end());
  return out;
}

DiPath realize_trace(const DirectedGraph&, const GraphPoint& x, const GraphPoint& y, const EdgeSequence& seq) {
  DiPath path = DiPath::constant(x);
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const double from = (i == 0 && x.is_interior()) ? x.t : 0.0;
    const double to = (i + 1 == seq.size() && y.is_interior()) ? y.t : 1.0;
    if (to > from) path.steps.push_back({seq[i], from, to});
  }
  return path;
}

std::string format_trace(const DirectedGraph& g, const EdgeSequence& seq) {
  std::string out = "[";
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out += ",";
    out += g.edge(seq[i]).id;
  }
  return out + "]";
}

}  // namespace ditc
