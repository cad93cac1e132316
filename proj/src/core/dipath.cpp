#include "ditc/core/dipath.hpp"

#include "ditc/core/error.hpp"

#include <algorithm>
#include <cmath>

namespace ditc {

double DiPath::length() const {
  double total = 0.0;
  for (const auto& s : steps) total += s.span();
  return total;
}

GraphPoint path_start(const DiPath& p) { return p.origin; }

GraphPoint path_end(const DirectedGraph& g, const DiPath& p) {
  if (p.steps.empty()) return p.origin;
  const Step& last = p.steps.back();
  return point_on(g, last.edge, last.to);
}

std::optional<std::string> validate_path(const DirectedGraph& g, const DiPath& p) {
  try {
    check_point(g, p.origin);
  } catch (const Error& e) {
    return std::string("invalid origin: ") + e.what();
  }
  for (std::size_t i = 0; i < p.steps.size(); ++i) {
    const Step& s = p.steps[i];
    if (s.edge < 0 || s.edge >= g.num_edges()) return "step " + std::to_string(i) + " references a missing edge";
    if (!(s.from >= 0.0 && s.from <= s.to && s.to <= 1.0))
      return "step " + std::to_string(i) + " is not a forward run inside [0,1]";
    const GraphPoint entry = point_on(g, s.edge, s.from);
    const GraphPoint previous = i == 0 ? p.origin : point_on(g, p.steps[i - 1].edge, p.steps[i - 1].to);
    if (!same_point(entry, previous)) return "step " + std::to_string(i) + " is not incident to its predecessor";
  }
  return std::nullopt;
}

DiPath concatenate(const DirectedGraph& g, const DiPath& p, const DiPath& q) {
  const GraphPoint junction = path_end(g, p);
  if (!same_point(junction, q.origin)) throw Error(ErrorCode::EndpointMismatch, "end of first path differs from start of second");
  if (p.steps.empty()) return {p.origin, q.steps};
  DiPath out = p;
  auto rest = q.steps.begin();
  if (rest != q.steps.end() && junction.is_interior()) {
    // p stops mid-edge, so q necessarily continues along the same edge
    Step& last = out.steps.back();
    if (rest->edge == last.edge) {
      last.to = rest->to;
      ++rest;
    }
  }
  out.steps.insert(out.steps.end(), rest, q.steps.end());
  return out;
}

namespace {

struct Cursor {
  std::size_t step;
  double t;
};

// Step index and parameter at arc length `arc` (0 <= arc <= length).
Cursor locate(const DiPath& p, double arc) {
  double remaining = arc;
  for (std::size_t i = 0; i < p.steps.size(); ++i) {
    const double span = p.steps[i].span();
    if (remaining <= span || i + 1 == p.steps.size()) {
      const double t = std::min(p.steps[i].from + remaining, p.steps[i].to);
      return {i, t};
    }
    remaining -= span;
  }
  return {0, 0.0};
}

}  // namespace

GraphPoint evaluate(const DirectedGraph& g, const DiPath& p, double s) {
  if (!(s >= 0.0 && s <= 1.0)) throw Error(ErrorCode::OutOfRange, "path fraction must lie in [0,1]");
  const double total = p.length();
  if (total == 0.0 || s == 0.0) return p.origin;
  if (s == 1.0) return path_end(g, p);
  const Cursor c = locate(p, s * total);
  return point_on(g, p.steps[c.step].edge, c.t);
}

DiPath subpath(const DirectedGraph& g, const DiPath& p, double a, double b) {
  if (!(a >= 0.0 && a <= b && b <= 1.0)) throw Error(ErrorCode::OutOfRange, "subpath fractions must satisfy 0 <= a <= b <= 1");
  const double total = p.length();
  const GraphPoint start = evaluate(g, p, a);
  if (total == 0.0 || a == b) return DiPath::constant(start);
  const Cursor first = locate(p, a * total);
  const Cursor last = b == 1.0 ? Cursor{p.steps.size() - 1, p.steps.back().to} : locate(p, b * total);

  DiPath out{start, {}};
  for (std::size_t i = first.step; i <= last.step; ++i) {
    Step s = p.steps[i];
    if (i == first.step) s.from = first.t;
    if (i == last.step) s.to = last.t;
    if (s.span() <= 0.0) continue;
    out.steps.push_back(s);
  }
  // a cursor sitting exactly at the end of a step leaves the next step's
  // entry as the true start; keep origin consistent with the first step
  if (!out.steps.empty()) out.origin = point_on(g, out.steps.front().edge, out.steps.front().from);
  return out;
}

DiPath edge_run(const DirectedGraph& g, EdgeId e, double from, double to) {
  const GraphPoint start = point_on(g, e, from);
  if (to <= from) return DiPath::constant(start);
  return {start, {{e, from, to}}};
}

DiPath edge_walk(const DirectedGraph& g, VertexId start, const std::vector<EdgeId>& edges) {
  DiPath out = DiPath::constant(GraphPoint::vertex(start));
  for (EdgeId e : edges) out.steps.push_back({e, 0.0, 1.0});
  (void)g;
  return out;
}

nlohmann::json path_to_json(const DirectedGraph& g, const DiPath& p) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : p.steps) steps.push_back({{"edge", g.edge(s.edge).id}, {"from", s.from}, {"to", s.to}});
  return {{"start", encode_point(g, p.origin)}, {"steps", steps}};
}

DiPath path_from_json(const DirectedGraph& g, const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("steps") || !j["steps"].is_array())
    throw Error(ErrorCode::InvalidInput, "path JSON needs a \"steps\" array");
  DiPath p;
  for (const auto& s : j["steps"]) {
    if (!s.contains("edge") || !s.contains("from") || !s.contains("to"))
      throw Error(ErrorCode::InvalidInput, "path step needs edge, from and to");
    p.steps.push_back({g.edge_index(s["edge"].get<std::string>()), s["from"].get<double>(), s["to"].get<double>()});
  }
  if (j.contains("start")) {
    p.origin = parse_point(g, j["start"].get<std::string>());
  } else if (!p.steps.empty()) {
    p.origin = point_on(g, p.steps.front().edge, p.steps.front().from);
  } else {
    throw Error(ErrorCode::InvalidInput, "constant path JSON needs a \"start\" point");
  }
  return p;
}

}  // namespace ditc
