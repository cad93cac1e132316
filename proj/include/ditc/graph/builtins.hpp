#pragma once

#include "ditc/graph/space.hpp"

namespace ditc {

struct BuiltinGraph {
  DirectedGraph graph;
  GraphPatchwork planner;
};

/// Vertices "0","1", edge "e": 0 -> 1. One patch, the straight section.
BuiltinGraph directed_interval();

/// Vertices "b","e", edges "top" and "bottom", both b -> e. Patch "I+" is all
/// of Γ over the closed top arc; patch "I-" is Γ over the bottom arc minus
/// the three pairs (b,e), (b,b), (e,e) already claimed by "I+".
BuiltinGraph directed_circle();

/// Vertex "v", loop "l". Diagonal / off-diagonal planner.
BuiltinGraph directed_loop();

/// Vertices v0..v{n-1}, edges e_i: v_i -> v_{i+1 mod n}. Cycle planner.
BuiltinGraph cycle_graph(int n);

/// Vertices "b","e", edges p0..p{k-1}, all b -> e.
BuiltinGraph parallel_edges(int k);

/// Vertex "v", loops "a" and "b".
BuiltinGraph figure_eight();

}  // namespace ditc
