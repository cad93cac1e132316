#include "cli.hpp"

#include "ditc/core/error.hpp"
#include "ditc/core/homotopy.hpp"
#include "ditc/core/testers.hpp"
#include "ditc/graph/builtins.hpp"
#include "ditc/graph/ditc.hpp"
#include "ditc/graph/io.hpp"
#include "ditc/graph/planner.hpp"
#include "ditc/nathom/nathom.hpp"
#include "ditc/product/product.hpp"
#include "ditc/pv/pv.hpp"
#include "ditc/sphere/sphere.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <sstream>

namespace ditc::cli {

namespace {

struct Globals {
  std::uint64_t seed = 0;
  bool json = false;
  bool dot = false;
};

struct Target {
  DirectedGraph graph;
  std::optional<GraphPatchwork> planner;  // specialized planner of a built-in
};

// "builtin:<name>" or a graph JSON file
Target load_target(const std::string& text) {
  const std::string prefix = "builtin:";
  if (text.rfind(prefix, 0) != 0) return {load_graph(text), std::nullopt};
  const std::string name = text.substr(prefix.size());
  auto numbered = [&](const std::string& stem) -> std::optional<int> {
    if (name.rfind(stem, 0) != 0 || name.size() == stem.size()) return std::nullopt;
    try {
      return std::stoi(name.substr(stem.size()));
    } catch (const std::exception&) {
      return std::nullopt;
    }
  };
  BuiltinGraph b;
  if (name == "interval") b = directed_interval();
  else if (name == "circle") b = directed_circle();
  else if (name == "loop") b = directed_loop();
  else if (name == "figure8") b = figure_eight();
  else if (auto n = numbered("cycle")) b = cycle_graph(*n);
  else if (auto k = numbered("parallel")) b = parallel_edges(*k);
  else throw Error(ErrorCode::InvalidInput, "unknown built-in '" + name + "'");
  return {std::move(b.graph), std::move(b.planner)};
}

GraphPatchwork planner_for(const Target& t) { return t.planner ? *t.planner : build_planner(t.graph); }

std::vector<GraphPoint> parse_samples(const DirectedGraph& g, const std::string& text) {
  std::vector<GraphPoint> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(parse_point(g, item));
  return out;
}

void emit(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << "\n"; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Directed topological complexity toolkit", "ditc"};
  app.require_subcommand(1);
  Globals globals;
  app.add_option("--seed", globals.seed, "Seed for sampled checks")->capture_default_str();
  app.add_flag("--json", globals.json, "JSON output (the default)");
  app.add_flag("--dot", globals.dot, "DOT output where available");
  app.fallthrough();

  std::function<void()> action;

  // graph
  auto* graph = app.add_subcommand("graph", "Directed graphs as d-spaces")->require_subcommand(1);
  graph->fallthrough();
  std::string graph_file, from_text, to_text;

  auto* g_ditc = graph->add_subcommand("ditc", "diTC bounds with reason code");
  g_ditc->add_option("graph", graph_file, "Graph JSON file or builtin:<name>")->required();
  g_ditc->callback([&] {
    action = [&] {
      const Target t = load_target(graph_file);
      if (globals.dot) {
        out << graph_to_dot(t.graph);
        return;
      }
      emit(out, ditc(t.graph).to_json());
    };
  });

  auto* g_plan = graph->add_subcommand("plan", "Section value for a pair of points");
  g_plan->add_option("graph", graph_file)->required();
  g_plan->add_option("--from", from_text, "Start point, v:<id> or e:<id>:<t>")->required();
  g_plan->add_option("--to", to_text, "End point")->required();
  g_plan->callback([&] {
    action = [&] {
      const Target t = load_target(graph_file);
      const GraphPatchwork pw = planner_for(t);
      const auto [index, path] = pw.plan(parse_point(t.graph, from_text), parse_point(t.graph, to_text));
      emit(out, {{"patch", pw.patches[index].id}, {"path", path_to_json(t.graph, path)}});
    };
  });

  auto* g_gamma = graph->add_subcommand("gamma", "Reachability membership");
  g_gamma->add_option("graph", graph_file)->required();
  g_gamma->add_option("--from", from_text);
  g_gamma->add_option("--to", to_text);
  g_gamma->callback([&] {
    action = [&] {
      const Target t = load_target(graph_file);
      const GammaOracle oracle(t.graph);
      if (from_text.empty() != to_text.empty()) throw CLI::ValidationError("--from and --to go together");
      if (!from_text.empty()) {
        const GraphPoint x = parse_point(t.graph, from_text), y = parse_point(t.graph, to_text);
        emit(out, {{"member", oracle.contains(x, y)}, {"traces", [&] {
                     const TraceCount c = TraceCounter(t.graph).between(x, y);
                     return c.infinite ? nlohmann::json("infinite") : nlohmann::json(c.count);
                   }()}});
        return;
      }
      nlohmann::json reach = nlohmann::json::object();
      for (VertexId v = 0; v < t.graph.num_vertices(); ++v) {
        nlohmann::json row = nlohmann::json::array();
        for (VertexId w = 0; w < t.graph.num_vertices(); ++w)
          if (oracle.reaches(v, w)) row.push_back(t.graph.vertex_name(w));
        reach[t.graph.vertex_name(v)] = row;
      }
      emit(out, {{"reach", reach}, {"strongly_connected", is_strongly_connected_dspace(t.graph)}});
    };
  });

  // torus
  auto* torus = app.add_subcommand("torus", "Directed tori")->require_subcommand(1);
  torus->fallthrough();
  int torus_n = 1;
  auto* t_plan = torus->add_subcommand("plan", "Product planner on the directed n-torus");
  t_plan->add_option("--n", torus_n, "Dimension")->required()->check(CLI::PositiveNumber);
  t_plan->add_option("--from", from_text, "Angles in turns, comma separated")->required();
  t_plan->add_option("--to", to_text)->required();
  t_plan->callback([&] {
    action = [&] {
      const TorusPlanner tp = torus_planner(torus_n);
      const auto x = parse_torus_point(torus_n, from_text), y = parse_torus_point(torus_n, to_text);
      const auto [index, paths] = tp.planner.plan(x, y);
      nlohmann::json coords = nlohmann::json::array();
      for (std::size_t i = 0; i < paths.size(); ++i) coords.push_back(path_to_json(tp.factors[i].graph, paths[i]));
      emit(out, {{"patch", tp.planner.patches[index].id}, {"paths", coords}, {"ditc", tp.report.to_json()}});
    };
  });

  // pv
  auto* pv = app.add_subcommand("pv", "Two-process PV programs")->require_subcommand(1);
  pv->fallthrough();
  std::string program;
  int pv_resolution = 8;
  bool svg = false;
  auto* p_sched = pv->add_subcommand("schedule", "Monotone schedule avoiding the forbidden region");
  p_sched->add_option("program", program, "e.g. Pa.Va.Pb.Vb|Pa.Va.Pb.Vb")->required();
  p_sched->add_option("--from", from_text, "x1,x2")->required();
  p_sched->add_option("--to", to_text, "y1,y2")->required();
  p_sched->add_option("--resolution", pv_resolution)->capture_default_str();
  p_sched->add_flag("--svg", svg, "SVG picture instead of JSON");
  p_sched->callback([&] {
    action = [&] {
      const PVProgram prog = parse_pv(program);
      const Schedule s = schedule(prog, parse_plane_point(from_text), parse_plane_point(to_text), pv_resolution);
      if (svg) {
        out << regions_to_svg(prog, forbidden_regions(prog), &s);
        return;
      }
      emit(out, s.to_json());
    };
  });
  auto* p_regions = pv->add_subcommand("regions", "Forbidden rectangles");
  p_regions->add_option("program", program)->required();
  p_regions->add_flag("--svg", svg, "SVG picture instead of JSON");
  p_regions->callback([&] {
    action = [&] {
      const PVProgram prog = parse_pv(program);
      const auto rects = forbidden_regions(prog);
      if (svg) {
        out << regions_to_svg(prog, rects);
        return;
      }
      emit(out, {{"program", prog.to_string()}, {"rectangles", regions_to_json(rects)}});
    };
  });

  // sphere
  auto* sphere = app.add_subcommand("sphere", "Directed spheres")->require_subcommand(1);
  sphere->fallthrough();
  int sphere_n = 1;
  int sphere_resolution = 16;
  auto* s_reach = sphere->add_subcommand("reach", "Reachability on the boundary of the (n+1)-cube");
  s_reach->add_option("-n", sphere_n, "Sphere dimension")->required()->check(CLI::PositiveNumber);
  s_reach->add_option("--from", from_text)->required();
  s_reach->add_option("--to", to_text)->required();
  s_reach->add_option("--resolution", sphere_resolution)->capture_default_str();
  s_reach->callback([&] {
    action = [&] {
      const auto x = parse_sphere_point(from_text), y = parse_sphere_point(to_text);
      const bool reachable = sphere_gamma(sphere_n, x, y, sphere_resolution);
      nlohmann::json j = {{"reachable", reachable}, {"ditc", sphere_ditc(sphere_n).to_json()}};
      if (reachable && sphere_n == 1) {
        const SpherePatchwork pw = sphere_planner();
        const auto [index, path] = pw.plan(x, y);
        nlohmann::json corners = nlohmann::json::array();
        for (const auto& c : path.corners) corners.push_back(coords_to_json(c));
        j["patch"] = pw.patches[index].id;
        j["path"] = corners;
      }
      emit(out, j);
    };
  });

  // nathom
  auto* nathom = app.add_subcommand("nathom", "Natural homology of sampled graphs")->require_subcommand(1);
  nathom->fallthrough();
  std::string samples_text;
  auto* n_build = nathom->add_subcommand("build", "Factorization diagram with H0 groups");
  n_build->add_option("graph", graph_file)->required();
  n_build->add_option("--samples", samples_text, "Comma separated points")->required();
  n_build->callback([&] {
    action = [&] {
      const Target t = load_target(graph_file);
      const NatDiagram d = factorization_diagram(t.graph, parse_samples(t.graph, samples_text));
      if (globals.dot) {
        out << d.to_dot();
        return;
      }
      emit(out, d.to_json());
    };
  });
  auto* n_point = nathom->add_subcommand("point-check", "Bisimilarity to the constant diagram Z");
  n_point->add_option("graph", graph_file)->required();
  n_point->add_option("--samples", samples_text)->required();
  n_point->callback([&] {
    action = [&] {
      const Target t = load_target(graph_file);
      const NatDiagram d = factorization_diagram(t.graph, parse_samples(t.graph, samples_text));
      const PointCheck pc = is_bisimilar_to_point(d);
      nlohmann::json rel = nlohmann::json::array();
      for (const auto& r : pc.relation)
        rel.push_back({{"object", d.objects[r.left].id}, {"iso", r.iso.to_json()}, {"point", "*"}});
      emit(out, {{"bisimilar", pc.bisimilar}, {"reason", pc.reason}, {"relation", rel}});
    };
  });

  // check
  auto* check = app.add_subcommand("check", "Sampled planner certificates")->require_subcommand(1);
  check->fallthrough();
  int samples = 1000;
  std::string patch_id;
  double epsilon = 0.01;
  auto* c_section = check->add_subcommand("section", "Partition, endpoints and path validity");
  c_section->add_option("graph", graph_file)->required();
  c_section->add_option("--samples", samples)->capture_default_str();
  c_section->callback([&] {
    action = [&] {
      const Target t = load_target(graph_file);
      const GraphSpace space(t.graph);
      emit(out, check_section(planner_for(t), space, samples, globals.seed).to_json());
    };
  });
  auto* c_cont = check->add_subcommand("continuity", "Sampled Lipschitz bound on one patch");
  c_cont->add_option("graph", graph_file)->required();
  c_cont->add_option("--patch", patch_id)->required();
  c_cont->add_option("--samples", samples)->capture_default_str();
  c_cont->add_option("--epsilon", epsilon)->capture_default_str();
  c_cont->callback([&] {
    action = [&] {
      const Target t = load_target(graph_file);
      const GraphSpace space(t.graph);
      emit(out, check_patch_continuity(planner_for(t), space, patch_id, samples, epsilon, globals.seed).to_json());
    };
  });

  std::vector<const char*> argv{"ditc"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "ditc: " << e.what() << "\n";
    return 1;
  }

  try {
    action();
  } catch (const Error& e) {
    emit(out, {{"error", {{"code", std::string(to_string(e.code()))}, {"message", e.what()}}}});
    return 2;
  } catch (const CLI::ParseError& e) {
    err << "ditc: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace ditc::cli
