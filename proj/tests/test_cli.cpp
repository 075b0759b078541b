#include <doctest.h>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "cli.hpp"
#include "gbg/errors.hpp"
#include "graph_file.hpp"

using gbg::cli::CliResult;
using gbg::cli::run;
using Json = nlohmann::ordered_json;

namespace {

std::string fixture(const std::string& name) { return std::string(GBG_DATA_DIR) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& contents) {
  auto path = std::filesystem::temp_directory_path() / ("gbg_cli_test_" + name);
  std::ofstream(path) << contents;
  return path.string();
}

Json run_json(std::vector<std::string> args) {
  args.insert(args.begin(), "--json");
  CliResult r = run(args);
  REQUIRE_MESSAGE(r.exit_code == 0, r.err);
  return Json::parse(r.out);
}

}  // namespace

TEST_CASE("homology of UD_3(K_{2,3})") {
  Json r = run_json({"homology", "--n", "3", fixture("k23.edges")});
  CHECK(r["result"]["chi"] == -2);
  CHECK(r["result"]["betti"] == Json::array({1, 3, 0}));
  CHECK(r["result"]["cell_counts"] == Json::array({10, 18, 6}));
}

TEST_CASE("intersection complex of the three-star grape") {
  Json r = run_json({"icomplex", fixture("s3grape.edges")});
  CHECK(r["result"]["icomplex"]["simplex_counts"] == Json::array({3, 3}));
  CHECK(r["result"]["icomplex"]["skeleton_betti1"] == 1);
  CHECK(r["result"]["icomplex"]["vertices"].size() == 3);
}

TEST_CASE("dumbbell is a RAAG") {
  Json r = run_json({"qi-raag", fixture("dumbbell.edges")});
  CHECK(r["result"]["verdict"] == "yes");
  CHECK(r["result"]["raag"]["summary"] == "1 edge + 2 isolated vertices");
  CHECK(r["result"]["raag"]["edges"].size() == 1);

  CliResult text = run({"qi-raag", fixture("dumbbell.edges")});
  CHECK(text.exit_code == 0);
  CHECK(text.out.find("verdict: yes") != std::string::npos);
}

TEST_CASE("ud output feeds back into homology") {
  for (auto [file, n] : std::vector<std::pair<std::string, int>>{{"k23.edges", 3}, {"dumbbell.edges", 2}, {"s3grape.edges", 2}}) {
    CAPTURE(file);
    CliResult ud = run({"--json", "ud", "--n", std::to_string(n), fixture(file)});
    REQUIRE_MESSAGE(ud.exit_code == 0, ud.err);
    std::string path = temp_file(file + ".json", ud.out);
    Json direct = run_json({"homology", "--n", std::to_string(n), fixture(file)});
    Json again = run_json({"homology", path});
    CHECK(again["result"] == direct["result"]);
  }
}

TEST_CASE("output is deterministic") {
  for (const char* cmd : {"info", "up2", "hierarchy", "grapes"}) {
    CliResult a = run({"--json", cmd, fixture("s3grape.edges")});
    CliResult b = run({"--json", cmd, fixture("s3grape.edges")});
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("flags") {
  CHECK(run({"--seed", "17", "info", fixture("k23.edges")}).exit_code == 0);
  CHECK(run({"info", "--json", fixture("k23.edges")}).out.front() == '{');
  CHECK(run({"--help"}).exit_code == 0);

  CliResult unknown = run({"info", "--frobnicate", fixture("k23.edges")});
  CHECK(unknown.exit_code == 1);
  CHECK(unknown.out.empty());
  CHECK(run({}).exit_code == 1);
  CHECK(run({"ud", fixture("k23.edges")}).exit_code == 1);
  CHECK(run({"homology", fixture("k23.edges")}).exit_code == 1);
}

TEST_CASE("malformed files give a line and column") {
  std::string path = temp_file("bad.edges", "# header\ne a b\nedge b c\n");
  CliResult r = run({"info", path});
  CHECK(r.exit_code == 1);
  CHECK(r.out.empty());
  CHECK(r.err.find(path + ":3:1:") != std::string::npos);

  std::string loops = temp_file("loops.edges", "e a b\nloops a x\n");
  CliResult l = run({"grapes", loops});
  CHECK(l.exit_code == 1);
  CHECK(l.err.find(loops + ":2:9:") != std::string::npos);

  CHECK(run({"info", "/nonexistent/graph.edges"}).exit_code == 1);
  CHECK(run({"homology", temp_file("broken.json", "{\n  \"result\": [\n")}).exit_code == 1);
}

TEST_CASE("unsupported requests exit with 2") {
  std::string k33 = temp_file("k33.edges", "e a0 b0\ne a0 b1\ne a0 b2\ne a1 b0\ne a1 b1\ne a1 b2\ne a2 b0\ne a2 b1\ne a2 b2\n");
  CliResult special = run({"special", "--n", "3", k33});
  CHECK(special.exit_code == 2);
  CHECK(special.out.empty());
  CHECK(run({"qi-raag", fixture("k23.edges")}).exit_code == 2);
  CHECK(run({"icomplex", "--filtration", "2", fixture("k23.edges")}).exit_code == 2);

  setenv("GBG_ENUM_CAP", "2", 1);
  CliResult capped = run({"up2", fixture("k23.edges")});
  unsetenv("GBG_ENUM_CAP");
  CHECK(capped.exit_code == 2);
}

TEST_CASE("grape files with loop annotations") {
  Json r = run_json({"grapes", "--leaves", "p,q,r,w,p", fixture("dynkin5.grape")});
  CHECK(r["result"]["status"] == "normal");
  CHECK(r["result"]["maximal_products"] == 5);
  CHECK(r["result"]["leaf_sequence"] == "nontrivial");
  Json v = run_json({"qi-raag", fixture("dynkin5.grape")});
  CHECK(v["result"]["verdict"] == "no");
  CHECK(v["result"]["dynkin"]["n"] == 5);
  Json f = run_json({"icomplex", "--filtration", "2", fixture("dynkin5.grape")});
  CHECK(f["result"]["icomplex"]["simplex_counts"] == Json::array({5, 6}));
  CHECK(run({"icomplex", "--filtration", "9", fixture("dynkin5.grape")}).exit_code == 1);
}

TEST_CASE("classify report") {
  Json r = run_json({"classify", "--n", "3", fixture("k23.edges")});
  CHECK(r["result"]["braid_free"] == true);
  CHECK(r["result"]["free_rank"]["rank"] == "3");
  Json d = run_json({"classify", "--n", "2", fixture("dumbbell.edges")});
  CHECK(d["result"]["braid_hyperbolic"] == false);
  CHECK(d["result"]["free_rank"].is_null());
  CHECK(d["result"]["free_abelian"]["p"] == 2);
}

TEST_CASE("graph file parser") {
  using gbg::cli::parse_graph_text;
  auto f = parse_graph_text("e a b  # trailing comment\nv z\n\n  e b c\nloops b 2\n", "t");
  CHECK(f.graph.num_vertices() == 4);
  CHECK(f.graph.num_edges() == 2);
  CHECK(f.loops.at("b") == 2);

  auto diagnostic = [](const std::string& text) {
    try {
      parse_graph_text(text, "t");
    } catch (const gbg::InvalidInput& e) {
      return std::string(e.what());
    }
    return std::string("accepted");
  };
  CHECK(diagnostic("e a a\n").rfind("t:1:5:", 0) == 0);
  CHECK(diagnostic("e a b\ne b a\n").rfind("t:2:3:", 0) == 0);
  CHECK(diagnostic("e a\n").rfind("t:1:4:", 0) == 0);
  CHECK(diagnostic("e a b c\n").rfind("t:1:7:", 0) == 0);
  CHECK(diagnostic("e a b\nloops q 1\n").rfind("t:2:7:", 0) == 0);
  CHECK(diagnostic("e a b\nloops a -1\n").rfind("t:2:9:", 0) == 0);
  CHECK(diagnostic("# nothing\n").rfind("t:1:1:", 0) == 0);
  CHECK(gbg::cli::hex_digest("") == "fnv1a64:cbf29ce484222325");
  CHECK(gbg::cli::fnv1a64("a") == 0xaf63dc4c8601ec8cull);
}
