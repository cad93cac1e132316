#include "ditc/graph/io.hpp"

#include "ditc/core/error.hpp"

#include <fstream>
#include <sstream>

namespace ditc {

nlohmann::json graph_to_json(const DirectedGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : g.edges())
    edges.push_back({{"id", e.id}, {"src", g.vertex_name(e.src)}, {"dst", g.vertex_name(e.dst)}});
  return {{"vertices", g.vertex_names()}, {"edges", edges}};
}

DirectedGraph graph_from_json(const nlohmann::json& j) {
  try {
    DirectedGraph g;
    for (const auto& v : j.at("vertices")) g.add_vertex(v.get<std::string>());
    if (j.contains("edges"))
      for (const auto& e : j.at("edges"))
        g.add_edge(e.at("id").get<std::string>(), e.at("src").get<std::string>(), e.at("dst").get<std::string>());
    return g;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorCode::InvalidInput, std::string("malformed graph JSON: ") + ex.what());
  }
}

DirectedGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorCode::InvalidInput, path + ": " + ex.what());
  }
  return graph_from_json(j);
}

std::string graph_to_dot(const DirectedGraph& g) {
  std::ostringstream out;
  out << "digraph G {\n";
  for (const auto& v : g.vertex_names()) out << "  \"" << v << "\";\n";
  for (const auto& e : g.edges())
    out << "  \"" << g.vertex_name(e.src) << "\" -> \"" << g.vertex_name(e.dst) << "\" [label=\"" << e.id << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace ditc
