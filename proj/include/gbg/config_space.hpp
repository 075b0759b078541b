#pragma once

#include <compare>
#include <string>
#include <vector>

#include "gbg/cube_complex.hpp"
#include "gbg/graph.hpp"

namespace gbg {

// A cell of the graph: the vertex u (v == -1) or the edge {u, v} with u < v.
struct Cell {
  int u;
  int v = -1;
  bool is_vertex() const { return v < 0; }
  auto operator<=>(const Cell&) const = default;
};

// Sorted, pairwise disjoint cells.
using Config = std::vector<Cell>;

std::vector<Cell> cells_of(const Subgraph& s);
int edge_cell_count(const Config& c);
bool cells_disjoint(const Cell& a, const Cell& b);

// Cells separated by tabs, edge endpoints by a space.  Vertex names never
// contain whitespace, so the encoding is unambiguous.
std::string config_key(const Graph& g, const Config& c);
// Throws InvalidInput on names missing from g or on a malformed key.
Config parse_config_key(const Graph& g, const std::string& key);
// Human-readable form, e.g. "{a, b-c}".
std::string config_label(const Graph& g, const Config& c);

// Builds the cube complex on a facet-closed family of configurations.
// Throws InvalidInput when a facet is missing.
CubeComplex complex_from_configs(const Graph& g, std::vector<Config> configs);

// Unordered discrete configuration space of n points.  The metadata entry
// "sufficiently_subdivided" records whether g is sufficiently subdivided for n.
CubeComplex build_UD(const Graph& g, int n);

// Cells of the product subcomplex a x b inside UD_2(g), sorted.
// Throws InvalidInput when a and b share a vertex.
std::vector<Config> product_subcomplex_cells(const Graph& g, const Subgraph& a, const Subgraph& b);

}  // namespace gbg
