#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <optional>
#include <sstream>

#include "gbg/classify.hpp"
#include "gbg/config_space.hpp"
#include "gbg/cube_complex.hpp"
#include "gbg/errors.hpp"
#include "gbg/grapes.hpp"
#include "gbg/intersection_complex.hpp"
#include "gbg/product_analysis.hpp"
#include "graph_file.hpp"

namespace gbg::cli {

using Json = nlohmann::ordered_json;

namespace {

struct Input {
  std::string path;
  std::string bytes;
  GraphFile file;
};

Input load(const std::string& path) {
  Input in{path, read_file(path), {}};
  in.file = parse_graph_text(in.bytes, path);
  return in;
}

void require_connected(const Input& in) {
  if (!is_connected(in.file.graph)) throw InvalidInput(in.path + ": the graph must be connected");
}

void require_n(int n) {
  if (n < 1) throw InvalidInput("--n must be a positive integer");
}

Json input_json(const std::string& path, const std::string& bytes, const Graph& g) {
  return Json{{"path", path}, {"digest", hex_digest(bytes)}, {"vertices", g.num_vertices()}, {"edges", g.num_edges()}};
}

Json graph_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : g.edge_names()) edges.push_back({u, v});
  return Json{{"vertices", g.names()}, {"edges", edges}};
}

Json edges_json(const Subgraph& s) {
  const Graph& g = s.parent();
  Json out = Json::array();
  for (int e : s.edge_ids()) out.push_back({g.name(g.edge(e).u), g.name(g.edge(e).v)});
  return out;
}

Json pair_json(const StandardPair& p) { return Json::array({edges_json(p.first), edges_json(p.second)}); }

Json names_json(const Graph& g, const std::vector<int>& vertices) {
  Json out = Json::array();
  for (int v : vertices) out.push_back(g.name(v));
  return out;
}

Json counts_json(const CubeComplex& x) { return Json(x.cell_counts()); }

Json homology_json(const CubeComplex& x) {
  auto h = homology_summary(x);
  return Json{{"cell_counts", counts_json(x)},
              {"chi", h.chi},
              {"betti", h.betti},
              {"components", component_count(x)},
              {"boundary_squares_to_zero", boundary_squares_to_zero(x)}};
}

void subdivision_warning(const CubeComplex& x, int n, Json& warnings) {
  auto it = x.metadata.find("sufficiently_subdivided");
  if (it != x.metadata.end() && it->second == "false") {
    warnings.push_back("graph is not sufficiently subdivided for n = " + std::to_string(n));
  }
}

Json icomplex_json(const IntersectionComplex& ic) {
  Json vertices = Json::array();
  for (const auto& v : ic.vertices) vertices.push_back(pair_json(v));
  Json simplices = Json::array();
  Json counts = Json::array();
  for (int d = 0; d <= ic.dim(); ++d) {
    counts.push_back(ic.count(d));
    for (const auto& s : ic.simplices[d]) {
      simplices.push_back(Json{{"dim", d}, {"vertices", s.vertices}, {"label", pair_json(s.label)}});
    }
  }
  auto a = ic_analysis(ic);
  return Json{{"simplex_counts", counts},
              {"connected", a.connected},
              {"skeleton_betti1", a.skeleton_betti1},
              {"flag", a.flag},
              {"simplex", a.simplex},
              {"vertices", vertices},
              {"simplices", simplices}};
}

Grapes require_grapes(const Input& in) {
  auto g = grapes_of(in.file, in.path);
  if (!g) throw Unsupported(in.path + ": not a bunch of grapes");
  return *g;
}

// Homology input from `ud --json` output.
CubeComplex complex_from_ud_json(const std::string& bytes, const std::string& source, Graph& graph, int& n) {
  Json doc;
  try {
    doc = Json::parse(bytes);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < bytes.size(); ++i) {
      if (bytes[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw InvalidInput(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": malformed JSON");
  }
  try {
    const Json& result = doc.at("result");
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& e : result.at("graph").at("edges")) edges.emplace_back(e.at(0).get<std::string>(), e.at(1).get<std::string>());
    graph = Graph(edges, result.at("graph").at("vertices").get<std::vector<std::string>>());
    n = result.at("n").get<int>();
    std::vector<Config> configs;
    for (const auto& level : result.at("cells")) {
      for (const auto& key : level) configs.push_back(parse_config_key(graph, key.get<std::string>()));
    }
    CubeComplex x = complex_from_configs(graph, configs);
    x.metadata["n"] = std::to_string(n);
    return x;
  } catch (const Json::exception& e) {
    throw InvalidInput(source + ": not a ud report (" + std::string(e.what()) + ")");
  }
}

bool looks_like_json(const std::string& bytes) {
  for (char c : bytes) {
    if (!std::isspace(static_cast<unsigned char>(c))) return c == '{';
  }
  return false;
}

bool is_scalar(const Json& j) { return !j.is_array() && !j.is_object(); }

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "none";
  return j.dump();
}

std::string inline_text(const Json& j) {
  if (is_scalar(j)) return scalar_text(j);
  std::string out = "[";
  bool first = true;
  for (const auto& x : j) {
    if (!first) out += ", ";
    first = false;
    out += inline_text(x);
  }
  return out + "]";
}

constexpr std::size_t kInlineLimit = 24;

void render(std::ostringstream& out, const Json& j, int indent) {
  const std::string pad(indent, ' ');
  for (const auto& [key, value] : j.items()) {
    if (is_scalar(value)) {
      out << pad << key << ": " << scalar_text(value) << "\n";
    } else if (value.is_object()) {
      out << pad << key << ":\n";
      render(out, value, indent + 2);
    } else if (value.empty()) {
      out << pad << key << ": (none)\n";
    } else if (value.size() <= kInlineLimit && inline_text(value).size() <= 160) {
      out << pad << key << ": " << inline_text(value) << "\n";
    } else {
      out << pad << key << ": " << value.size() << " entries (use --json)\n";
    }
  }
}

struct Options {
  bool json = false;
  long long seed = 0;
  std::string file;
  int n = 0;
  int filtration = 0;
  std::string leaves;
};

Json cmd_info(const Input& in) {
  const Graph& g = in.file.graph;
  const int components = component_count(g);
  Json leaves = Json::array();
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) == 1) leaves.push_back(g.name(v));
  }
  Json r{{"vertices", g.num_vertices()},
         {"edges", g.num_edges()},
         {"components", components},
         {"cyclomatic_number", g.num_edges() - g.num_vertices() + components},
         {"essential_vertices", names_json(g, essential_vertices(g))},
         {"leaves", leaves},
         {"tree", is_tree(g)},
         {"leafless", is_leafless(Subgraph::whole(g))},
         {"planar", is_planar(g)},
         {"two_disjoint_cycles", has_two_disjoint_cycles(g)},
         {"loops_annotations", in.file.loops.size()}};
  return r;
}

Json cmd_ud(const Input& in, int n, Json& warnings) {
  require_n(n);
  const Graph& g = in.file.graph;
  CubeComplex x = build_UD(g, n);
  subdivision_warning(x, n, warnings);
  Json cells = Json::array();
  for (int d = 0; d <= x.dim(); ++d) {
    Json level = Json::array();
    for (const auto& c : x.cubes(d)) level.push_back(c.key);
    cells.push_back(level);
  }
  return Json{{"n", n},
              {"sufficiently_subdivided", x.metadata.at("sufficiently_subdivided") == "true"},
              {"dim", x.dim()},
              {"cell_counts", counts_json(x)},
              {"graph", graph_json(g)},
              {"cells", cells}};
}

Json cmd_special(const Input& in, int n, Json& warnings) {
  require_n(n);
  CubeComplex x = build_UD(in.file.graph, n);
  subdivision_warning(x, n, warnings);
  if (x.dim() > 2) throw Unsupported("specialness is only checked for square complexes; UD_" + std::to_string(n) + " has dimension " + std::to_string(x.dim()));
  auto report = specialness_report(x);
  Json pairs = Json::array();
  for (auto [a, b] : report.inter_osculating) pairs.push_back({a, b});
  return Json{{"n", n},
              {"dim", x.dim()},
              {"npc", is_npc(x)},
              {"special", report.special()},
              {"hyperplanes", hyperplanes(x).size()},
              {"self_intersecting", report.self_intersecting},
              {"self_osculating", report.self_osculating},
              {"one_sided", report.one_sided},
              {"inter_osculating", pairs},
              {"closed_surface", is_closed_surface(x)}};
}

Json cmd_up2(const Input& in) {
  require_connected(in);
  const Graph& g = in.file.graph;
  CubeComplex ud = build_UD(g, 2);
  CubeComplex up = build_UP2(g);
  Json products = Json::array();
  for (const auto& p : maximal_products(g)) products.push_back(pair_json(p));
  return Json{{"ud2_cell_counts", counts_json(ud)},
              {"up2_cell_counts", counts_json(up)},
              {"missing_squares", ud.count(2) - up.count(2)},
              {"missing_edges", ud.count(1) - up.count(1)},
              {"maximal_products", products}};
}

Json cmd_hierarchy(const Input& in) {
  require_connected(in);
  auto r = hierarchy_report(in.file.graph);
  return Json{{"in_G0", r.in_G0},
              {"cond_A", r.cond_A},
              {"cond_B", r.cond_B},
              {"cond_C", r.cond_C},
              {"in_G45", r.in_G45},
              {"in_G3", r.in_G3},
              {"in_G2", to_string(r.in_G2)},
              {"in_G2_reason", r.in_G2_reason},
              {"in_G1", to_string(r.in_G1)},
              {"in_G1_reason", r.in_G1_reason},
              {"standard_intersection_property", r.sip}};
}

Json cmd_icomplex(const Input& in, int filtration) {
  require_connected(in);
  if (filtration != 0) {
    Grapes g = require_grapes(in);
    if (grape_status(g) != GrapeStatus::normal) throw Unsupported(in.path + ": the filtration needs a normal bunch of grapes");
    Json r{{"filtration", filtration}};
    r["icomplex"] = icomplex_json(icomplex_filtration(g, filtration));
    return r;
  }
  return Json{{"icomplex", icomplex_json(build_intersection_complex(in.file.graph))}};
}

Json stem_json(const Grapes& g) {
  Json loops = Json::object();
  for (int v = 0; v < g.stem.num_vertices(); ++v) loops[g.stem.name(v)] = g.loops[v];
  return Json{{"stem", graph_json(g.stem)}, {"loops", loops}};
}

std::vector<std::string> split_names(const std::string& list) {
  std::vector<std::string> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

Json cmd_grapes(const Input& in, const std::string& leaves) {
  auto grapes = grapes_of(in.file, in.path);
  if (!grapes) {
    if (!leaves.empty()) throw Unsupported(in.path + ": not a bunch of grapes");
    return Json{{"recognized", false}};
  }
  const Grapes& g = *grapes;
  Json r{{"recognized", true}};
  r.update(stem_json(g));
  r["status"] = to_string(grape_status(g));
  r["diameter"] = g.diameter;
  r["total_loops"] = g.total_loops();
  if (grape_status(g) == GrapeStatus::normal) {
    r["maximal_products"] = twig_maximal_products(g).size();
    auto rank = free_factor_rank(g);
    Json per_vertex = Json::object();
    for (const auto& [v, ranks] : rank.per_vertex) {
      per_vertex[v] = Json{{"total", ranks.total}, {"partial", ranks.partial}, {"free", ranks.free}};
    }
    r["free_factor_rank"] = Json{{"rank", rank.rank}, {"per_vertex", per_vertex}};
    Json cliques = Json::object();
    for (const auto& [v, val] : filtration_cliques(g)) cliques[v] = val;
    r["filtration_cliques"] = cliques;
  }
  if (!leaves.empty()) r["leaf_sequence"] = to_string(leaf_sequence_analysis(g, split_names(leaves)));
  return r;
}

Json cmd_qi_raag(const Input& in) {
  Grapes g = require_grapes(in);
  auto report = qi_raag_verdict(g);
  Json r{{"verdict", to_string(report.verdict)}, {"rule", report.rule}};
  if (report.raag) {
    const auto& raag = *report.raag;
    Json edges = Json::array();
    for (auto [a, b] : raag.edges) edges.push_back({raag.vertices[a], raag.vertices[b]});
    std::string summary = std::to_string(raag.edges.size()) + (raag.edges.size() == 1 ? " edge" : " edges") + " + " +
                          std::to_string(raag.isolated_rank) + " isolated vertices";
    r["raag"] = Json{{"summary", summary},
                     {"stem_path", raag.stem_path},
                     {"vertices", raag.vertices},
                     {"edges", edges},
                     {"isolated_rank", raag.isolated_rank}};
  }
  if (report.dynkin) r["dynkin"] = Json{{"u", report.dynkin->u}, {"v", report.dynkin->v}, {"n", report.dynkin->n}};
  if (report.tripod) {
    const auto& t = *report.tripod;
    r["tripod"] = Json{{"a", t.a}, {"b", t.b}, {"c", t.c}, {"center", t.center}};
  }
  return r;
}

Json cmd_classify(const Input& in, int n) {
  require_n(n);
  require_connected(in);
  const Graph& g = in.file.graph;
  Json r{{"n", n}};
  auto elem = detect_elementary(g);
  r["elementary"] = elem ? Json{{"k", elem->k}, {"l", elem->l}} : Json(nullptr);
  r["braid_free"] = braid_free(g, n);
  r["braid_hyperbolic"] = braid_hyperbolic(g, n);
  auto rank = free_rank(g, n);
  if (rank) {
    Json fr{{"rank", rank->rank.str()}, {"method", rank->method}};
    if (rank->subdivision) fr["subdivision"] = Json{{"vertices", rank->subdivision->num_vertices()}, {"edges", rank->subdivision->num_edges()}};
    r["free_rank"] = fr;
  } else {
    r["free_rank"] = nullptr;
  }
  auto w = free_abelian_witness(g, n);
  Json cycles = Json::array();
  for (const auto& c : w.cycles) cycles.push_back(edges_json(c));
  r["free_abelian"] = Json{{"p", w.p}, {"q", w.q}, {"rank", w.p + w.q}, {"cycles", cycles}, {"vertices", names_json(g, w.vertices)}};
  return r;
}

}  // namespace

CliResult run(const std::vector<std::string>& args) {
  CliResult result;
  Options opt;
  CLI::App app{"Graph braid group toolkit", "gbg"};
  app.require_subcommand(1);
  app.add_flag("--json", opt.json, "Structured JSON output");
  app.add_option("--seed", opt.seed, "Accepted and ignored; every algorithm is deterministic");

  auto file_arg = [&](CLI::App* sub) { sub->add_option("file", opt.file, "Graph file")->required(); };
  auto n_arg = [&](CLI::App* sub, bool required) {
    auto o = sub->add_option("--n", opt.n, "Number of points");
    if (required) o->required();
  };
  struct Sub {
    const char* name;
    const char* help;
  };
  std::map<std::string, CLI::App*> subs;
  for (const Sub& s : {Sub{"info", "Basic graph invariants"}, Sub{"ud", "Cells of UD_n"},
                       Sub{"homology", "Homology of UD_n (graph file or ud --json output)"},
                       Sub{"special", "Nonpositive curvature and specialness of UD_n"},
                       Sub{"up2", "Maximal product subcomplexes and UP_2"}, Sub{"hierarchy", "Hierarchy conditions"},
                       Sub{"icomplex", "Intersection complex of the maximal products"},
                       Sub{"grapes", "Bunch-of-grapes structure"}, Sub{"qi-raag", "Quasi-isometry to RAAG verdict"},
                       Sub{"classify", "Freeness, hyperbolicity and ranks of the braid group"}}) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->fallthrough();
    file_arg(sub);
    subs[s.name] = sub;
  }
  n_arg(subs["ud"], true);
  n_arg(subs["homology"], false);
  n_arg(subs["special"], true);
  n_arg(subs["classify"], true);
  subs["icomplex"]->add_option("--filtration", opt.filtration, "Keep simplices spanned by stem paths of length <= K");
  subs["grapes"]->add_option("--leaves", opt.leaves, "Comma-separated closed leaf sequence to analyze");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    result.out = app.help();
    return result;
  } catch (const CLI::ParseError& e) {
    result.exit_code = kExitInvalid;
    result.err = "error: " + std::string(e.what()) + "\n";
    return result;
  }

  std::string command;
  for (const auto& [name, sub] : subs) {
    if (sub->parsed()) command = name;
  }

  try {
    Json warnings = Json::array();
    Json payload;
    Json input;
    if (command == "homology" && looks_like_json(read_file(opt.file))) {
      std::string bytes = read_file(opt.file);
      Graph g;
      int n = 0;
      CubeComplex x = complex_from_ud_json(bytes, opt.file, g, n);
      if (opt.n != 0 && opt.n != n) throw InvalidInput(opt.file + ": --n " + std::to_string(opt.n) + " does not match n = " + std::to_string(n) + " in the report");
      input = input_json(opt.file, bytes, g);
      payload = Json{{"n", n}};
      payload.update(homology_json(x));
    } else {
      Input in = load(opt.file);
      input = input_json(opt.file, in.bytes, in.file.graph);
      if (command == "info") {
        payload = cmd_info(in);
      } else if (command == "ud") {
        payload = cmd_ud(in, opt.n, warnings);
      } else if (command == "homology") {
        if (opt.n == 0) throw InvalidInput("homology of a graph file needs --n");
        require_n(opt.n);
        CubeComplex x = build_UD(in.file.graph, opt.n);
        subdivision_warning(x, opt.n, warnings);
        payload = Json{{"n", opt.n}};
        payload.update(homology_json(x));
      } else if (command == "special") {
        payload = cmd_special(in, opt.n, warnings);
      } else if (command == "up2") {
        payload = cmd_up2(in);
      } else if (command == "hierarchy") {
        payload = cmd_hierarchy(in);
      } else if (command == "icomplex") {
        payload = cmd_icomplex(in, opt.filtration);
      } else if (command == "grapes") {
        payload = cmd_grapes(in, opt.leaves);
      } else if (command == "qi-raag") {
        payload = cmd_qi_raag(in);
      } else {
        payload = cmd_classify(in, opt.n);
      }
    }
    Json report{{"command", command}, {"input", input}, {"warnings", warnings}, {"result", payload}};
    if (opt.json) {
      result.out = report.dump(2) + "\n";
    } else {
      std::ostringstream out;
      render(out, report, 0);
      result.out = out.str();
    }
  } catch (const Unsupported& e) {
    result.exit_code = kExitUnsupported;
    result.err = "unsupported: " + std::string(e.what()) + "\n";
  } catch (const InvalidInput& e) {
    result.exit_code = kExitInvalid;
    result.err = "error: " + std::string(e.what()) + "\n";
  }
  return result;
}

}  // namespace gbg::cli
