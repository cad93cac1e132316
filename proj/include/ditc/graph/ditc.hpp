#pragma once

#include "ditc/graph/space.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace ditc {

enum class DiTCReason {
  UniqueTraces,
  MultiClassLowerBound,
  FiniteConflictTwoPatch,
  StronglyConnectedFormula,
  GeneralThreePatch,
  KnownBuiltin,
};

std::string_view to_string(DiTCReason reason);

struct DiTCReport {
  int lower = 1;
  int upper = 1;
  bool exact = true;
  DiTCReason reason = DiTCReason::UniqueTraces;
  std::optional<GraphPatchwork> patchwork;

  /// {"lower":2,"upper":2,"exact":true,"reason":"FiniteConflictTwoPatch"}
  nlohmann::json to_json() const;
};

/// Cell pairs of Γ carrying more than one trace class.
struct ConflictAnalysis {
  bool any_multi_class = false;
  bool only_vertex_pairs = true;
  std::vector<std::pair<VertexId, VertexId>> vertex_conflicts;
};

ConflictAnalysis analyze_conflicts(const DirectedGraph& g);

struct DitcOptions {
  /// Disconnected graphs: combine per-component reports (max of the bounds,
  /// patch-wise union of the witnesses). When false, throw NotConnected.
  bool combine_components = true;
};

/// Tiered decision:
///  (a) unique trace class for every pair   -> exact 1
///  (b) otherwise lower bound 2
///  (c) strongly connected                  -> exact min(b1,2)+1
///  (d) conflicts only at vertex pairs      -> exact 2, two patches
///  (e) otherwise                           -> [2,3] with the three-patch witness
DiTCReport ditc(const DirectedGraph& g, const DitcOptions& options = {});

}  // namespace ditc
