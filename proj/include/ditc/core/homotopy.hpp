#pragma once

#include "ditc/core/dipath.hpp"
#include "ditc/core/patchwork.hpp"

namespace ditc {

/// H(u,t): u on [0,t/2], the section path from u(t/2) to u(1-t/2) on
/// [t/2,1-t/2], then u on [1-t/2,1]. H(u,0) = s(u(0),u(1)) and H(u,1) = u.
/// Returned as a DiPath (constant speed); throws NoGlobalSection unless the
/// planner has exactly one patch.
DiPath contraction_homotopy(const DirectedGraph& g, const Patchwork<GraphPoint, DiPath>& planner, const DiPath& u, double t);

/// The same homotopy evaluated with the piecewise parametrization of the
/// formula itself, at fraction s.
GraphPoint contraction_homotopy_at(const DirectedGraph& g, const Patchwork<GraphPoint, DiPath>& planner, const DiPath& u,
                                   double t, double s);

}  // namespace ditc
