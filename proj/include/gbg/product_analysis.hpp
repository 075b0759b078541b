#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "gbg/config_space.hpp"
#include "gbg/cube_complex.hpp"
#include "gbg/graph.hpp"

namespace gbg {

// Two vertex-disjoint connected nontrivial leafless subgraphs, stored with the
// smaller one (in Subgraph order) first.
struct StandardPair {
  Subgraph first;
  Subgraph second;
  bool operator==(const StandardPair& o) const { return first == o.first && second == o.second; }
  bool operator<(const StandardPair& o) const {
    if (!(first == o.first)) return first < o.first;
    return second < o.second;
  }
};

StandardPair make_standard_pair(const Subgraph& a, const Subgraph& b);
bool is_standard_pair(const StandardPair& p);

// Leafless core of the subgraph induced on the vertices outside s.
// Throws InvalidInput when s has a leaf.
Subgraph orthogonal_complement(const Graph& g, const Subgraph& s);

// Connected nontrivial leafless s whose complement is connected and
// nontrivial and whose double complement is s again.
bool is_maximally_standard(const Graph& g, const Subgraph& s);
std::vector<Subgraph> enumerate_maximally_standard(const Graph& g);
// Unordered pairs {s, complement(s)} over maximally standard s.
std::vector<StandardPair> maximal_products(const Graph& g);

// Whether disjoint connected leafless subgraphs contain a and b respectively.
// a and b are vertex-disjoint and each is a vertex, an edge or a connected
// subgraph.  Throws InvalidInput otherwise.
bool separable(const Graph& g, const Subgraph& a, const Subgraph& b);
bool separable(const Graph& g, const Cell& a, const Cell& b);
Subgraph cell_subgraph(const Graph& g, const Cell& c);

// UP_2 as the union of the maximal product subcomplexes.
std::vector<Config> up2_cells(const Graph& g);
// UP_2 as the cells of UD_2 whose two cells are separable.
std::vector<Config> up2_cells_by_separability(const Graph& g);
CubeComplex build_UP2(const Graph& g);

// Finite simple graph on vertices 0..n-1.
struct AbstractGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  int component_count() const;
  bool connected() const { return n > 0 && component_count() == 1; }
};

struct StandardnessGraphs {
  std::vector<Subgraph> standard;
  std::vector<Subgraph> maximal;
  std::vector<Subgraph> cycles;  // cycles with nonempty complement
  AbstractGraph s_graph;
  AbstractGraph m_graph;
  AbstractGraph c_graph;
};
// Throws CapExceeded when the leafless-subgraph search is too large.
StandardnessGraphs standardness_graphs(const Graph& g);

// subset_cap < 0 checks every subset.  Throws CapExceeded on huge families.
bool standard_intersection_property(const Graph& g, int subset_cap = -1);

enum class Tri { yes, no, unknown };
std::string to_string(Tri t);

struct HierarchyReport {
  bool in_G0 = false;
  bool cond_A = false;
  bool cond_B = false;
  bool cond_C = false;
  bool in_G3 = false;
  bool in_G45 = false;
  Tri in_G1 = Tri::unknown;
  Tri in_G2 = Tri::unknown;
  std::string in_G1_reason;
  std::string in_G2_reason;
  bool sip = false;
};
HierarchyReport hierarchy_report(const Graph& g);

}  // namespace gbg
