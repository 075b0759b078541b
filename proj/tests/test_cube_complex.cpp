#include <doctest.h>

#include <map>

#include "gbg/config_space.hpp"
#include "gbg/cube_complex.hpp"
#include "gbg/exact_rank.hpp"
#include "gbg/families.hpp"

using namespace gbg;

namespace {

// Builds square complexes from named vertices, edges (lower, upper) and
// squares (lower_0, upper_0, lower_1, upper_1).
struct SquareBuilder {
  CubeComplex x;
  std::map<std::string, int> v, e;
  void vertex(const std::string& name) { v[name] = x.add_cube(name, {}); }
  void edge(const std::string& name, const std::string& a, const std::string& b) {
    e[name] = x.add_cube(name, {v.at(a), v.at(b)});
  }
  void square(const std::string& name, const std::string& l0, const std::string& u0, const std::string& l1,
              const std::string& u1) {
    x.add_cube(name, {e.at(l0), e.at(u0), e.at(l1), e.at(u1)});
  }
};

CubeComplex torus(int n) {
  SquareBuilder b;
  auto id = [&](int i, int j) { return std::to_string((i + n) % n) + "," + std::to_string((j + n) % n); };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) b.vertex("v" + id(i, j));
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      b.edge("h" + id(i, j), "v" + id(i, j), "v" + id(i + 1, j));
      b.edge("u" + id(i, j), "v" + id(i, j), "v" + id(i, j + 1));
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) b.square("s" + id(i, j), "u" + id(i, j), "u" + id(i + 1, j), "h" + id(i, j), "h" + id(i, j + 1));
  }
  return b.x;
}

CubeComplex mobius_strip() {
  SquareBuilder b;
  for (const char* name : {"a0", "a1", "a2", "b0", "b1", "b2"}) b.vertex(name);
  b.edge("r0", "a0", "b0");
  b.edge("r1", "a1", "b1");
  b.edge("r2", "a2", "b2");
  b.edge("a01", "a0", "a1");
  b.edge("a12", "a1", "a2");
  b.edge("a2b0", "a2", "b0");
  b.edge("b01", "b0", "b1");
  b.edge("b12", "b1", "b2");
  b.edge("b2a0", "b2", "a0");
  b.square("s0", "r0", "r1", "a01", "b01");
  b.square("s1", "r1", "r2", "a12", "b12");
  b.square("s2", "r2", "r0", "a2b0", "b2a0");
  return b.x;
}

CubeComplex cube_corner() {
  SquareBuilder b;
  for (const char* name : {"o", "x", "y", "z", "xy", "yz", "xz"}) b.vertex(name);
  b.edge("ox", "o", "x");
  b.edge("oy", "o", "y");
  b.edge("oz", "o", "z");
  b.edge("x-xy", "x", "xy");
  b.edge("y-xy", "y", "xy");
  b.edge("y-yz", "y", "yz");
  b.edge("z-yz", "z", "yz");
  b.edge("x-xz", "x", "xz");
  b.edge("z-xz", "z", "xz");
  b.square("sxy", "oy", "x-xy", "ox", "y-xy");
  b.square("syz", "oz", "y-yz", "oy", "z-yz");
  b.square("sxz", "oz", "x-xz", "ox", "z-xz");
  return b.x;
}

}  // namespace

TEST_CASE("exact rank") {
  SparseMatrix id{3, 3, {{{0, 1}}, {{1, 1}}, {{2, 1}}}};
  CHECK(exact_rank(id) == 3);
  SparseMatrix dep{3, 3, {{{0, 1}, {1, 2}}, {{0, 2}, {1, 4}}, {{2, 5}}}};
  CHECK(exact_rank(dep) == 2);
  SparseMatrix empty{0, 4, {}};
  CHECK(exact_rank(empty) == 0);
}

TEST_CASE("exact rank survives 64-bit overflow") {
  const std::int64_t big = (std::int64_t{1} << 62) - 1;
  SparseMatrix full{2, 2, {{{0, big}, {1, 1}}, {{0, 1}, {1, big}}}};
  CHECK(exact_rank(full) == 2);
  SparseMatrix singular{2, 2, {{{0, std::int64_t{1} << 61}, {1, std::int64_t{1} << 62}}, {{0, 1}, {1, 2}}}};
  CHECK(exact_rank(singular) == 1);
  SparseMatrix chain{3, 3, {{{0, big}, {1, big - 1}}, {{1, big}, {2, big - 2}}, {{0, 3}, {2, big}}}};
  CHECK(exact_rank(chain) == 3);
}

TEST_CASE("add_cube validates facets") {
  CubeComplex x;
  int a = x.add_cube("a", {});
  int b = x.add_cube("b", {});
  CHECK_THROWS_AS(x.add_cube("a", {}), InvalidInput);
  x.add_cube("ab", {a, b});
  CHECK_THROWS_AS(x.add_cube("ab2", {a, b}), InvalidInput);
  CHECK_THROWS_AS(x.add_cube("aa", {a, a}), InvalidInput);
  CHECK_THROWS_AS(x.add_cube("bad", {a, 7}), InvalidInput);
}

TEST_CASE("torus homology and surface structure") {
  CubeComplex t = torus(3);
  CHECK(boundary_squares_to_zero(t));
  auto h = homology_summary(t);
  CHECK(h.chi == 0);
  CHECK(h.betti == std::vector<std::size_t>{1, 2, 1});
  CHECK(is_closed_surface(t));
  CHECK(is_npc(t));
  CHECK(hyperplanes(t).size() == 6);
}

TEST_CASE("Moebius strip has a one-sided hyperplane") {
  CubeComplex m = mobius_strip();
  CHECK(boundary_squares_to_zero(m));
  auto h = homology_summary(m);
  CHECK(h.chi == 0);
  CHECK(h.betti == std::vector<std::size_t>{1, 1, 0});
  CHECK(!is_closed_surface(m));
  auto report = specialness_report(m);
  CHECK(report.one_sided.size() == 1);
  CHECK(!report.special());
}

TEST_CASE("three squares around a corner violate the link condition") {
  CubeComplex c = cube_corner();
  CHECK(!is_npc(c));
  auto link = vertex_link(c, "o");
  CHECK(link.vertices.size() == 3);
  CHECK(link.simplices.size() == 3 + 3);
}

TEST_CASE("homology respects the dimension cap") {
  CubeComplex t = torus(3);
  CHECK_THROWS_AS(homology_summary(t, 1), Unsupported);
}

TEST_CASE("one-skeleton and components") {
  CubeComplex t = torus(3);
  Graph skel = one_skeleton(t);
  CHECK(skel.num_vertices() == 9);
  CHECK(skel.num_edges() == 18);
  CHECK(component_count(t) == 1);
  CubeComplex two;
  two.add_cube("p", {});
  two.add_cube("q", {});
  CHECK(component_count(two) == 2);
  CHECK(homology_summary(two).betti == std::vector<std::size_t>{2});
}

TEST_CASE("configuration spaces of small graphs are special") {
  for (const auto& g : {families::complete(4), families::complete_bipartite(2, 3), families::dumbbell(),
                        families::cycle(5)}) {
    CubeComplex x = build_UD(g, 2);
    CHECK(is_npc(x));
    CHECK(specialness_report(x).special());
  }
}

TEST_CASE("specialness needs square complexes") {
  CubeComplex x = build_UD(families::complete_bipartite(3, 3), 3);
  CHECK(x.dim() == 3);
  CHECK_THROWS_AS(hyperplanes(x), Unsupported);
}
