#include "ditc/pv/pv.hpp"

#include "ditc/core/digraph.hpp"
#include "ditc/core/error.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <sstream>
#include <tuple>

namespace ditc {

std::string PVProgram::to_string() const {
  std::string out;
  for (int i = 0; i < 2; ++i) {
    if (i) out += "|";
    for (std::size_t k = 0; k < processes[i].size(); ++k) {
      if (k) out += ".";
      out += processes[i][k].label();
    }
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<PVAction> parse_process(std::string_view text, int process) {
  std::vector<PVAction> out;
  text = trim(text);
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t dot = text.find('.', pos);
    const std::string_view token = trim(text.substr(pos, dot == std::string_view::npos ? std::string_view::npos : dot - pos));
    if (token.size() < 2 || (token[0] != 'P' && token[0] != 'V'))
      throw Error(ErrorCode::SyntaxError, "process " + std::to_string(process) + ": bad action '" + std::string(token) + "'");
    for (char c : token.substr(1))
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
        throw Error(ErrorCode::SyntaxError, "process " + std::to_string(process) + ": bad semaphore in '" + std::string(token) + "'");
    out.push_back({token[0] == 'P' ? PVKind::P : PVKind::V, std::string(token.substr(1))});
    if (dot == std::string_view::npos) break;
    pos = dot + 1;
  }
  std::map<std::string, bool> held;
  for (const auto& a : out) {
    bool& h = held[a.semaphore];
    if (a.kind == PVKind::P && h)
      throw Error(ErrorCode::UnbalancedLocks, "process " + std::to_string(process) + " locks " + a.semaphore + " twice");
    if (a.kind == PVKind::V && !h)
      throw Error(ErrorCode::UnbalancedLocks, "process " + std::to_string(process) + " releases " + a.semaphore + " without holding it");
    h = a.kind == PVKind::P;
  }
  for (const auto& [sem, h] : held)
    if (h) throw Error(ErrorCode::UnbalancedLocks, "process " + std::to_string(process) + " never releases " + sem);
  return out;
}

struct Interval {
  std::string semaphore;
  int p;
  int v;
};

std::vector<Interval> lock_intervals(const std::vector<PVAction>& actions) {
  std::vector<Interval> out;
  std::map<std::string, int> open;
  for (int k = 0; k < static_cast<int>(actions.size()); ++k) {
    const auto& a = actions[k];
    if (a.kind == PVKind::P) {
      open[a.semaphore] = k;
    } else {
      out.push_back({a.semaphore, open.at(a.semaphore), k});
    }
  }
  return out;
}

bool near_integer(double v, long& out) {
  const double r = std::round(v);
  if (std::abs(v - r) > 1e-9) return false;
  out = static_cast<long>(r);
  return true;
}

}  // namespace

PVProgram parse_pv(std::string_view text) {
  const std::size_t bar = text.find('|');
  if (bar == std::string_view::npos || text.find('|', bar + 1) != std::string_view::npos)
    throw Error(ErrorCode::SyntaxError, "expected exactly two processes separated by '|'");
  PVProgram prog;
  prog.processes[0] = parse_process(text.substr(0, bar), 1);
  prog.processes[1] = parse_process(text.substr(bar + 1), 2);
  return prog;
}

std::vector<Rect> forbidden_regions(const PVProgram& prog) {
  std::vector<Rect> out;
  const auto first = lock_intervals(prog.processes[0]);
  const auto second = lock_intervals(prog.processes[1]);
  for (const auto& a : first)
    for (const auto& b : second) {
      if (a.semaphore != b.semaphore) continue;
      out.push_back({{a.p + 0.5, b.p + 0.5}, {a.v + 0.5, b.v + 0.5}, a.semaphore});
    }
  return out;
}

bool inside_open(const Rect& r, const PlanePoint& p) {
  return r.lo[0] < p[0] && p[0] < r.hi[0] && r.lo[1] < p[1] && p[1] < r.hi[1];
}

bool segment_hits(const Rect& r, const PlanePoint& a, const PlanePoint& b) {
  double t0 = 0.0, t1 = 1.0;
  bool open_lo = false, open_hi = false;
  for (int d = 0; d < 2; ++d) {
    const double delta = b[d] - a[d];
    if (delta == 0.0) {
      if (!(r.lo[d] < a[d] && a[d] < r.hi[d])) return false;
      continue;
    }
    double enter = (r.lo[d] - a[d]) / delta;
    double leave = (r.hi[d] - a[d]) / delta;
    if (enter > leave) std::swap(enter, leave);
    // strict on the rectangle side, closed on the segment side
    if (enter >= t0) {
      t0 = enter;
      open_lo = true;
    }
    if (leave <= t1) {
      t1 = leave;
      open_hi = true;
    }
  }
  if (open_lo || open_hi) return t0 < t1;
  return t0 <= t1;
}

PVGamma::PVGamma(const PVProgram& prog, int resolution)
    : prog_(prog), resolution_(resolution), rects_(forbidden_regions(prog)) {
  if (resolution < 2) throw Error(ErrorCode::InvalidInput, "resolution must be at least 2");
}

std::array<int, 2> PVGamma::grid_index(const PlanePoint& p) const {
  std::array<int, 2> out{};
  for (int d = 0; d < 2; ++d) {
    long k = 0;
    if (!std::isfinite(p[d]) || !near_integer(p[d] * resolution_, k))
      throw Error(ErrorCode::InvalidInput, "point is not on the 1/" + std::to_string(resolution_) + " grid");
    if (k < 0 || k > static_cast<long>(prog_.length(d)) * resolution_)
      throw Error(ErrorCode::OutOfRange, "point lies outside the program square");
    out[d] = static_cast<int>(k);
  }
  return out;
}

PlanePoint PVGamma::grid_point(int i, int j) const {
  return {static_cast<double>(i) / resolution_, static_cast<double>(j) / resolution_};
}

bool PVGamma::forbidden(const PlanePoint& p) const {
  return std::any_of(rects_.begin(), rects_.end(), [&](const Rect& r) { return inside_open(r, p); });
}

bool PVGamma::move_ok(int i, int j, int di, int dj) const {
  const PlanePoint a = grid_point(i, j);
  const PlanePoint b = grid_point(i + di, j + dj);
  return std::none_of(rects_.begin(), rects_.end(), [&](const Rect& r) { return segment_hits(r, a, b); });
}

std::vector<std::vector<char>> PVGamma::reach_table(std::array<int, 2> from, std::array<int, 2> to) const {
  const int n1 = prog_.length(0) * resolution_;
  const int n2 = prog_.length(1) * resolution_;
  std::vector<std::vector<char>> reach(n1 + 1, std::vector<char>(n2 + 1, 0));
  if (from[0] > to[0] || from[1] > to[1]) return reach;
  for (int i = to[0]; i >= from[0]; --i)
    for (int j = to[1]; j >= from[1]; --j) {
      if (forbidden(grid_point(i, j))) continue;
      if (i == to[0] && j == to[1]) {
        reach[i][j] = 1;
        continue;
      }
      const bool right = i < to[0] && reach[i + 1][j] && move_ok(i, j, 1, 0);
      const bool up = j < to[1] && reach[i][j + 1] && move_ok(i, j, 0, 1);
      reach[i][j] = right || up;
    }
  return reach;
}

bool PVGamma::contains(const PlanePoint& x, const PlanePoint& y) const {
  const auto a = grid_index(x);
  const auto b = grid_index(y);
  if (a[0] > b[0] || a[1] > b[1]) return false;
  return reach_table(a, b)[a[0]][a[1]] != 0;
}

PVGamma pv_gamma(const PVProgram& prog, int resolution) { return PVGamma(prog, resolution); }

nlohmann::json Schedule::to_json() const {
  nlohmann::json pts = nlohmann::json::array();
  for (const auto& p : path) pts.push_back({p[0], p[1]});
  return {{"path", pts}, {"interleaving", interleaving}};
}

std::vector<std::string> interleaving_of(const PVProgram& prog, const std::vector<PlanePoint>& path) {
  // (segment, position on segment, V before P, process, label)
  std::vector<std::tuple<std::size_t, double, int, int, std::string>> events;
  for (std::size_t s = 0; s + 1 < path.size(); ++s) {
    const PlanePoint& a = path[s];
    const PlanePoint& b = path[s + 1];
    for (int d = 0; d < 2; ++d) {
      if (b[d] <= a[d]) continue;
      for (int k = 0; k < prog.length(d); ++k) {
        const double c = k + 0.5;
        if (!(a[d] <= c && c < b[d])) continue;
        const PVAction& act = prog.processes[d][k];
        events.emplace_back(s, (c - a[d]) / (b[d] - a[d]), act.kind == PVKind::V ? 0 : 1, d,
                            std::to_string(d + 1) + ":" + act.label());
      }
    }
  }
  std::sort(events.begin(), events.end());
  std::vector<std::string> out;
  for (auto& e : events) out.push_back(std::move(std::get<4>(e)));
  return out;
}

Schedule schedule(const PVProgram& prog, const PlanePoint& x, const PlanePoint& y, int resolution) {
  const PVGamma gamma(prog, resolution);
  auto at = gamma.grid_index(x);
  const auto target = gamma.grid_index(y);
  if (at[0] > target[0] || at[1] > target[1]) throw Error(ErrorCode::Unreachable, "target is not above the start");
  const auto reach = gamma.reach_table(at, target);
  if (!reach[at[0]][at[1]]) throw Error(ErrorCode::Unreachable, "no directed path avoids the forbidden region");

  std::vector<std::array<int, 2>> moves;
  while (at != target) {
    const auto [i, j] = at;
    std::array<int, 2> step{0, 1};
    if (i < target[0] && j < target[1] && reach[i + 1][j + 1] && gamma.move_ok(i, j, 1, 1)) {
      step = {1, 1};
    } else if (i < target[0] && reach[i + 1][j] && gamma.move_ok(i, j, 1, 0)) {
      step = {1, 0};
    }
    moves.push_back(step);
    at = {i + step[0], j + step[1]};
  }

  Schedule out;
  out.path.push_back(x);
  std::array<int, 2> pos = gamma.grid_index(x);
  for (std::size_t k = 0; k < moves.size(); ++k) {
    pos = {pos[0] + moves[k][0], pos[1] + moves[k][1]};
    if (k + 1 < moves.size() && moves[k + 1] == moves[k]) continue;
    out.path.push_back(gamma.grid_point(pos[0], pos[1]));
  }
  out.interleaving = interleaving_of(prog, out.path);
  return out;
}

PlanePoint parse_plane_point(const std::string& text) {
  PlanePoint out{};
  std::stringstream in(text);
  std::string item;
  int d = 0;
  while (std::getline(in, item, ',')) {
    if (d == 2) throw Error(ErrorCode::InvalidInput, "expected two coordinates in '" + text + "'");
    std::size_t used = 0;
    try {
      out[d] = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw Error(ErrorCode::InvalidInput, "bad coordinate '" + item + "'");
    ++d;
  }
  if (d != 2) throw Error(ErrorCode::InvalidInput, "expected two coordinates in '" + text + "'");
  return out;
}

nlohmann::json regions_to_json(const std::vector<Rect>& rects) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rects)
    out.push_back({{"semaphore", r.semaphore}, {"lo", {r.lo[0], r.lo[1]}}, {"hi", {r.hi[0], r.hi[1]}}});
  return out;
}

std::string regions_to_svg(const PVProgram& prog, const std::vector<Rect>& rects, const Schedule* sched) {
  constexpr double kUnit = 60.0;
  constexpr double kMargin = 30.0;
  const double w = prog.length(0) * kUnit;
  const double h = prog.length(1) * kUnit;
  auto px = [&](double x) { return format_double(kMargin + x * kUnit); };
  auto py = [&](double y) { return format_double(kMargin + h - y * kUnit); };
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << format_double(w + 2 * kMargin) << "\" height=\""
      << format_double(h + 2 * kMargin) << "\">\n";
  out << "  <rect x=\"" << px(0) << "\" y=\"" << py(prog.length(1)) << "\" width=\"" << format_double(w)
      << "\" height=\"" << format_double(h) << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (const auto& r : rects)
    out << "  <rect x=\"" << px(r.lo[0]) << "\" y=\"" << py(r.hi[1]) << "\" width=\""
        << format_double((r.hi[0] - r.lo[0]) * kUnit) << "\" height=\"" << format_double((r.hi[1] - r.lo[1]) * kUnit)
        << "\" fill=\"#bbbbbb\"><title>" << r.semaphore << "</title></rect>\n";
  for (int d = 0; d < 2; ++d)
    for (int k = 0; k < prog.length(d); ++k) {
      const double c = k + 0.5;
      const std::string label = prog.processes[d][k].label();
      if (d == 0)
        out << "  <text x=\"" << px(c) << "\" y=\"" << format_double(kMargin + h + 18) << "\" font-size=\"11\" text-anchor=\"middle\">" << label << "</text>\n";
      else
        out << "  <text x=\"" << format_double(kMargin - 6) << "\" y=\"" << py(c) << "\" font-size=\"11\" text-anchor=\"end\">" << label << "</text>\n";
    }
  if (sched && !sched->path.empty()) {
    out << "  <polyline fill=\"none\" stroke=\"black\" stroke-width=\"2\" points=\"";
    for (std::size_t k = 0; k < sched->path.size(); ++k) out << (k ? " " : "") << px(sched->path[k][0]) << "," << py(sched->path[k][1]);
    out << "\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace ditc
