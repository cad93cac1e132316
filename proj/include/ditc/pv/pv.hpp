#pragma once

#include <nlohmann/json.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ditc {

enum class PVKind : std::uint8_t { P, V };

struct PVAction {
  PVKind kind = PVKind::P;
  std::string semaphore;
  std::string label() const { return (kind == PVKind::P ? "P" : "V") + semaphore; }
};

/// Two processes over binary semaphores. Process i with n actions occupies
/// [0,n] on axis i; action k (0-based) happens at coordinate k + 0.5.
struct PVProgram {
  std::array<std::vector<PVAction>, 2> processes;
  int length(int process) const { return static_cast<int>(processes.at(process).size()); }
  std::string to_string() const;
};

/// "Pa.Va.Pb.Vb|Pa.Va.Pb.Vb". Throws SyntaxError or UnbalancedLocks.
PVProgram parse_pv(std::string_view text);

/// Open rectangle (lo[0],hi[0]) x (lo[1],hi[1]).
struct Rect {
  std::array<double, 2> lo{};
  std::array<double, 2> hi{};
  std::string semaphore;
};

using PlanePoint = std::array<double, 2>;

/// One rectangle per semaphore and pair of P-V intervals, one from each process.
std::vector<Rect> forbidden_regions(const PVProgram& prog);

bool inside_open(const Rect& r, const PlanePoint& p);
/// Whether the closed segment a-b meets the open rectangle.
bool segment_hits(const Rect& r, const PlanePoint& a, const PlanePoint& b);

/// Reachability between points of the 1/resolution grid: y >= x and a
/// monotone staircase of grid moves avoids every open rectangle.
class PVGamma {
public:
  PVGamma(const PVProgram& prog, int resolution);  // throws InvalidInput for resolution < 2

  /// Throws InvalidInput off the grid, OutOfRange outside the box.
  bool contains(const PlanePoint& x, const PlanePoint& y) const;
  bool forbidden(const PlanePoint& p) const;

  int resolution() const { return resolution_; }
  const PVProgram& program() const { return prog_; }
  const std::vector<Rect>& regions() const { return rects_; }

  std::array<int, 2> grid_index(const PlanePoint& p) const;
  PlanePoint grid_point(int i, int j) const;
  bool move_ok(int i, int j, int di, int dj) const;

  /// reach[i][j]: grid node (i,j) reaches the target node, inside the box
  /// spanned by `from` and the target.
  std::vector<std::vector<char>> reach_table(std::array<int, 2> from, std::array<int, 2> to) const;

private:
  PVProgram prog_;
  int resolution_;
  std::vector<Rect> rects_;
};

PVGamma pv_gamma(const PVProgram& prog, int resolution);

struct Schedule {
  std::vector<PlanePoint> path;           // corners of a monotone polyline
  std::vector<std::string> interleaving;  // "1:Pa", "2:Va", ...
  nlohmann::json to_json() const;
};

/// Greedy scheduler: diagonal moves while the diagonal stays clear and keeps
/// the target reachable, else advance process 1, else process 2.
/// Throws Unreachable when (x,y) is not in Γ.
Schedule schedule(const PVProgram& prog, const PlanePoint& x, const PlanePoint& y, int resolution);

/// Actions crossed by the path, in order; at equal positions V precedes P,
/// then process 1 precedes process 2.
std::vector<std::string> interleaving_of(const PVProgram& prog, const std::vector<PlanePoint>& path);

PlanePoint parse_plane_point(const std::string& text);

nlohmann::json regions_to_json(const std::vector<Rect>& rects);
std::string regions_to_svg(const PVProgram& prog, const std::vector<Rect>& rects, const Schedule* sched = nullptr);

}  // namespace ditc
