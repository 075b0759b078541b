#include <doctest.h>

#include "gbg/families.hpp"
#include "gbg/graph.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace gbg;

namespace {

std::vector<Graph> small_corpus() {
  auto out = corpus::all_connected_graphs(5);
  for (auto& g : corpus::random_connected_graphs(25, 6, 8, 0.25, 7)) out.push_back(std::move(g));
  for (auto& ng : corpus::named_graphs()) {
    if (ng.graph.num_edges() <= 16) out.push_back(ng.graph);
  }
  return out;
}

bool brute_two_disjoint_cycles(const Graph& g) {
  auto cycles = oracle::cycles(g);
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    auto vi = oracle::vertices_of(g, cycles[i]);
    for (std::size_t j = i + 1; j < cycles.size(); ++j) {
      bool disjoint = true;
      for (int v : oracle::vertices_of(g, cycles[j])) disjoint = disjoint && !vi.count(v);
      if (disjoint) return true;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("graph construction sorts names and rejects loops and repeats") {
  Graph g({{"b", "a"}, {"c", "a"}}, {"z"});
  CHECK(g.num_vertices() == 4);
  CHECK(g.name(0) == "a");
  CHECK(g.edge(0) == Edge{0, 1});
  CHECK(g.degree(g.index_of("z")) == 0);
  CHECK(g.index_of("missing") == -1);
  using EdgeList = std::vector<std::pair<std::string, std::string>>;
  CHECK_THROWS_AS(Graph(EdgeList{{"a", "a"}}), InvalidInput);
  CHECK_THROWS_AS(Graph(EdgeList{{"a", "b"}, {"b", "a"}}), InvalidInput);
}

TEST_CASE("subgraph algebra") {
  Graph g = families::cycle(4);
  Subgraph a = Subgraph::of_edge(g, 0);
  Subgraph b = Subgraph::of_edge(g, g.edge_between(g.index_of("2"), g.index_of("3")));
  CHECK(a.vertex_disjoint(b));
  Subgraph u = a.united(b);
  CHECK(u.num_edges() == 2);
  CHECK(u.contains(a));
  CHECK(!a.contains(u));
  CHECK(u.intersected(a) == a);
  CHECK(Subgraph::whole(g).to_string() == "{0-1, 0-3, 1-2, 2-3}");
  CHECK(Subgraph::of_vertex(g, 2).to_string() == "{2}");
}

TEST_CASE("leafless core strips hanging trees") {
  Graph g({{"a", "b"}, {"b", "c"}, {"a", "c"}, {"c", "d"}, {"d", "e"}, {"d", "f"}});
  Subgraph core = leafless_core(Subgraph::whole(g));
  CHECK(core.num_edges() == 3);
  CHECK(core.num_vertices() == 3);
  CHECK(leafless_core(Subgraph::whole(families::path(4))).empty());
}

TEST_CASE("cycle enumeration matches edge-subset search") {
  for (const auto& g : small_corpus()) {
    CAPTURE(Subgraph::whole(g).to_string());
    CHECK(enumerate_cycles(g).size() == oracle::cycles(g).size());
  }
  CHECK(enumerate_cycles(families::complete(5)).size() == 37);
}

TEST_CASE("cycle enumeration respects the cap") {
  CHECK_THROWS_AS(enumerate_cycles(families::complete(7), 50), CapExceeded);
}

TEST_CASE("two disjoint cycles agrees with pairwise search") {
  for (const auto& g : small_corpus()) {
    CAPTURE(Subgraph::whole(g).to_string());
    CHECK(has_two_disjoint_cycles(g) == brute_two_disjoint_cycles(g));
  }
}

TEST_CASE("no two disjoint cycles implies a feedback vertex set of size at most three") {
  for (const auto& g : small_corpus()) {
    if (!has_two_disjoint_cycles(g)) CHECK(oracle::feedback_vertex_number(g) <= 3);
  }
}

TEST_CASE("planarity") {
  CHECK(!is_planar(families::complete(5)));
  CHECK(!is_planar(families::complete_bipartite(3, 3)));
  CHECK(!is_planar(families::petersen()));
  CHECK(is_planar(families::complete(4)));
  CHECK(is_planar(families::dodecahedral()));
  CHECK(is_planar(corpus::nested_squares()));
}

TEST_CASE("blocks partition the edges") {
  for (const auto& g : small_corpus()) {
    std::vector<int> seen(g.num_edges(), 0);
    for (const auto& b : blocks(g)) {
      for (int e : b.edge_ids()) ++seen[e];
      CHECK(is_connected(b));
    }
    for (int c : seen) CHECK(c == 1);
  }
  CHECK(blocks(families::dumbbell()).size() == 3);
  CHECK(blocks(families::complete(4)).size() == 1);
}

TEST_CASE("subdivision makes a graph sufficiently subdivided") {
  for (int n = 2; n <= 4; ++n) {
    for (const auto& g : {families::complete(4), families::complete_bipartite(2, 3), families::dumbbell(),
                          families::star(3)}) {
      Graph h = subdivide_for(g, n);
      CHECK(is_sufficiently_subdivided(h, n));
      CHECK(h.num_edges() - h.num_vertices() == g.num_edges() - g.num_vertices());
      CHECK(are_isomorphic(smooth_to_minimal_model(h), smooth_to_minimal_model(g)));
    }
  }
  CHECK(!is_sufficiently_subdivided(families::complete(4), 3));
  CHECK(is_sufficiently_subdivided(families::complete(4), 2));
}

TEST_CASE("minimal models") {
  CHECK(smooth_to_minimal_model(families::path(5)).num_edges() == 1);
  CHECK(smooth_to_minimal_model(families::cycle(7)).num_edges() == 3);
  Graph k23 = smooth_to_minimal_model(families::complete_bipartite(2, 3));
  CHECK(k23.num_vertices() == 4);
  CHECK(k23.num_edges() == 5);
}

TEST_CASE("isomorphism test") {
  CHECK(are_isomorphic(families::cycle(6), Graph({{"x", "y"}, {"y", "z"}, {"z", "w"}, {"w", "u"}, {"u", "t"}, {"t", "x"}})));
  CHECK(!are_isomorphic(families::cycle(6), corpus::named("prism")));
  CHECK(are_isomorphic(families::petersen(), families::petersen()));
  CHECK(!are_isomorphic(families::star(3), families::path(3)));
}

TEST_CASE("trees and essential vertices") {
  for (const auto& t : corpus::random_trees(20, 1, 10, 3)) {
    CHECK(is_tree(t));
    CHECK(!has_cycle(Subgraph::whole(t)));
  }
  CHECK(essential_vertices(families::dumbbell()).size() == 2);
  auto path = shortest_path(families::path(4), 0, 4);
  CHECK(path.size() == 5);
}
