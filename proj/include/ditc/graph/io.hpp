#pragma once

#include "ditc/core/digraph.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace ditc {

/// {"vertices":["b","e"],"edges":[{"id":"top","src":"b","dst":"e"}]}
nlohmann::json graph_to_json(const DirectedGraph& g);
DirectedGraph graph_from_json(const nlohmann::json& j);  // throws InvalidInput

DirectedGraph load_graph(const std::string& path);

std::string graph_to_dot(const DirectedGraph& g);

}  // namespace ditc
