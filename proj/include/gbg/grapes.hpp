#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "gbg/graph.hpp"
#include "gbg/intersection_complex.hpp"
#include "gbg/product_analysis.hpp"

namespace gbg {

// A tree (the stem) with loops[v] triangles attached at each stem vertex v.
// `ambient` is the whole graph; it is shared so that copies of a Grapes value
// keep their subgraphs valid.
struct Grapes {
  Graph stem;
  std::vector<int> loops;                // by stem vertex
  std::shared_ptr<const Graph> ambient;
  std::vector<int> stem_to_ambient;      // stem vertex -> ambient vertex
  std::vector<std::vector<int>> grapes;  // by stem vertex: ambient edge ids, three per triangle
  int diameter = 0;                      // of the stem

  int total_loops() const;
  // Ambient edge of a stem edge.
  int ambient_edge(int stem_edge) const;
};

// Triangles at stem vertex v get the vertices "v#g{i}a" and "v#g{i}b", i >= 1.
// Throws InvalidInput when the stem is not a tree or loops has the wrong size.
Grapes materialize_grapes(const Graph& stem, const std::vector<int>& loops);

// Some iff every block of g is an edge or a triangle and the triangles hang
// off a tree of bridges.  g must be connected.
std::optional<Grapes> recognize_grapes(const Graph& g);

enum class GrapeStatus { small, large, normal };
std::string to_string(GrapeStatus s);
GrapeStatus grape_status(const Grapes& G);

// Strips loop-free stem leaves until none is left.
Grapes normalize(const Grapes& G);

// Leafless core of the part of the ambient graph hanging off `side` once the
// stem edge is removed.
Subgraph twig_component(const Grapes& G, int stem_edge, int side);

struct TwigProduct {
  int stem_edge;
  StandardPair pair;
};
// One maximal product per stem edge.  Throws InvalidInput unless normal.
std::vector<TwigProduct> twig_maximal_products(const Grapes& G);

// The simplices are the sets of twigs lying on a common stem path, labelled by
// the components at the two ends of the shortest such path.  Vertices are in
// the order of maximal_products on the ambient graph.  Throws InvalidInput
// unless normal.
IntersectionComplex grape_icomplex(const Grapes& G);

// Simplices whose shortest containing stem path has at most k edges.
// Throws InvalidInput unless 2 <= k <= diameter.
IntersectionComplex icomplex_filtration(const Grapes& G, int k);

// Twigs as vertices, twigs sharing a stem vertex adjacent; vertex order as in
// grape_icomplex.
AbstractGraph glued_clique_graph(const Grapes& G);
// Stem vertex name -> valency, for stem vertices of valency >= 2.
std::map<std::string, int> filtration_cliques(const Grapes& G);

struct VertexRanks {
  long long total = 0;    // (val + m)(val + 3m - 3)/2 + 1
  long long partial = 0;  // C(val - 1, 2) + val m
  long long free = 0;     // 3m(m - 1)/2 + val m
};
struct FreeFactorRank {
  long long rank = 0;
  std::map<std::string, VertexRanks> per_vertex;
};
// Throws InvalidInput unless normal.
FreeFactorRank free_factor_rank(const Grapes& G);

struct RaagGraph {
  std::vector<std::string> stem_path;  // normalized stem, smaller end first
  std::vector<std::string> vertices;   // "a{p},{q}" then "b{p},{q}"
  std::vector<std::pair<int, int>> edges;
  long long isolated_rank = 0;
};
std::optional<RaagGraph> path_stem_raag(const Grapes& G);

struct DynkinWitness {
  std::string u;
  std::string v;
  int n = 0;
};
// Computed on the stem as given.
std::optional<DynkinWitness> dynkin_witness(const Grapes& G);

struct Tripod {
  int a, b, c;
  std::string center;  // first stem vertex (by name) realizing the triple
  bool operator==(const Tripod& o) const { return a == o.a && b == o.b && c == o.c; }
};
// Ordered by (a + b + c, a + b, a).
std::vector<Tripod> tripod_set(const Grapes& G);
bool tripod_before(const Tripod& x, const Tripod& y);

enum class Verdict { yes, no, unknown };
std::string to_string(Verdict v);
struct QiRaagReport {
  Verdict verdict = Verdict::unknown;
  std::optional<RaagGraph> raag;
  std::optional<DynkinWitness> dynkin;
  std::optional<Tripod> tripod;
  std::string rule;
};
QiRaagReport qi_raag_verdict(const Grapes& G);

enum class LeafSequenceResult { nontrivial, inconclusive };
std::string to_string(LeafSequenceResult r);
// `leaves` are stem vertex names w_0..w_n with w_0 == w_n.  Throws InvalidInput
// on a malformed sequence or a grape that is not normal.
LeafSequenceResult leaf_sequence_analysis(const Grapes& G, const std::vector<std::string>& leaves);

}  // namespace gbg
