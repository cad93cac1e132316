#include "ditc/core/homotopy.hpp"

#include "ditc/core/error.hpp"

namespace ditc {

namespace {

const Patchwork<GraphPoint, DiPath>::PatchType& global_patch(const Patchwork<GraphPoint, DiPath>& planner) {
  if (planner.size() != 1) throw Error(ErrorCode::NoGlobalSection, "planner has " + std::to_string(planner.size()) + " patches");
  return planner.patches.front();
}

void check_t(double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw Error(ErrorCode::OutOfRange, "homotopy parameter outside [0,1]");
}

}  // namespace

DiPath contraction_homotopy(const DirectedGraph& g, const Patchwork<GraphPoint, DiPath>& planner, const DiPath& u, double t) {
  const auto& patch = global_patch(planner);
  check_t(t);
  if (t == 1.0) return u;
  const double a = t / 2.0;
  const double b = 1.0 - t / 2.0;
  const DiPath middle = patch.section(evaluate(g, u, a), evaluate(g, u, b));
  DiPath out = concatenate(g, subpath(g, u, 0.0, a), middle);
  return concatenate(g, out, subpath(g, u, b, 1.0));
}

GraphPoint contraction_homotopy_at(const DirectedGraph& g, const Patchwork<GraphPoint, DiPath>& planner, const DiPath& u,
                                   double t, double s) {
  const auto& patch = global_patch(planner);
  check_t(t);
  if (!(s >= 0.0 && s <= 1.0)) throw Error(ErrorCode::OutOfRange, "path parameter outside [0,1]");
  const double a = t / 2.0;
  const double b = 1.0 - t / 2.0;
  if (s <= a || s >= b || t == 1.0) return evaluate(g, u, s);
  const DiPath middle = patch.section(evaluate(g, u, a), evaluate(g, u, b));
  return evaluate(g, middle, (s - a) / (b - a));
}

}  // namespace ditc
