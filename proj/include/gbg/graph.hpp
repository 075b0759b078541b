#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "gbg/errors.hpp"

namespace gbg {

using Bits = boost::dynamic_bitset<>;

// Endpoints are vertex indices with u < v.
struct Edge {
  int u;
  int v;
  bool operator==(const Edge&) const = default;
};

// Finite simple graph with string-named vertices.
//
// Vertex indices follow the lexicographic order of the names and edge ids
// follow the lexicographic order of (u, v), so every enumeration that walks
// indices in increasing order is canonical.
class Graph {
 public:
  Graph() = default;
  // Throws InvalidInput on a loop or a repeated edge.
  explicit Graph(const std::vector<std::pair<std::string, std::string>>& edges,
                 const std::vector<std::string>& isolated = {});

  int num_vertices() const { return static_cast<int>(names_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  const std::string& name(int v) const { return names_[v]; }
  const std::vector<std::string>& names() const { return names_; }
  // -1 when absent.
  int index_of(const std::string& name) const;

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int e) const { return edges_[e]; }
  // -1 when u and v are not adjacent.
  int edge_between(int u, int v) const;
  int other_end(int e, int v) const { return edges_[e].u == v ? edges_[e].v : edges_[e].u; }

  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  const std::vector<int>& incident(int v) const { return inc_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }

  std::vector<std::pair<std::string, std::string>> edge_names() const;

  bool operator==(const Graph& other) const {
    return names_ == other.names_ && edges_ == other.edges_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::vector<int>> inc_;
};

// Edge subset of a parent graph together with a vertex set containing all
// endpoints.  The parent must outlive the subgraph.
class Subgraph {
 public:
  explicit Subgraph(const Graph& parent);

  static Subgraph whole(const Graph& g);
  static Subgraph of_vertex(const Graph& g, int v);
  static Subgraph of_edge(const Graph& g, int e);
  static Subgraph of_edges(const Graph& g, const std::vector<int>& edge_ids);
  static Subgraph of_edge_bits(const Graph& g, const Bits& edges);
  // Induced on the given vertex set.
  static Subgraph induced(const Graph& g, const Bits& vertices);

  const Graph& parent() const { return *parent_; }
  const Bits& edge_set() const { return edges_; }
  const Bits& vertex_set() const { return vertices_; }

  bool trivial() const { return edges_.none(); }
  bool empty() const { return vertices_.none(); }
  std::size_t num_edges() const { return edges_.count(); }
  std::size_t num_vertices() const { return vertices_.count(); }
  bool has_vertex(int v) const { return vertices_.test(v); }
  bool has_edge(int e) const { return edges_.test(e); }
  int degree(int v) const;

  std::vector<int> edge_ids() const;
  std::vector<int> vertex_ids() const;

  void add_vertex(int v) { vertices_.set(v); }
  void add_edge(int e);

  bool contains(const Subgraph& other) const;
  bool vertex_disjoint(const Subgraph& other) const;
  Subgraph united(const Subgraph& other) const;
  Subgraph intersected(const Subgraph& other) const;

  // Sorted edge names joined for display, e.g. "{a-b, b-c}" or "{v}".
  std::string to_string() const;

  bool operator==(const Subgraph& other) const {
    return edges_ == other.edges_ && vertices_ == other.vertices_;
  }
  // Canonical order: sorted edge-id sequences, then vertex-id sequences.
  bool operator<(const Subgraph& other) const;

 private:
  const Graph* parent_;
  Bits edges_;
  Bits vertices_;
};

// Materialize a subgraph as a standalone graph keeping the vertex names.
Graph to_graph(const Subgraph& s);

std::vector<Subgraph> connected_components(const Subgraph& s);
bool is_connected(const Subgraph& s);
bool is_connected(const Graph& g);
int component_count(const Graph& g);
bool is_leafless(const Subgraph& s);
bool is_tree(const Graph& g);
bool has_cycle(const Subgraph& s);
std::vector<int> essential_vertices(const Graph& g);
std::vector<int> bfs_distances(const Graph& g, int source);
// Vertex sequence of a shortest path (unique in a tree).
std::vector<int> shortest_path(const Graph& g, int from, int to);

// Unique maximal subgraph in which every vertex has degree >= 2.
Subgraph leafless_core(const Subgraph& s);

bool is_sufficiently_subdivided(const Graph& g, int n);
Graph subdivide_for(const Graph& g, int n);
Graph smooth_to_minimal_model(const Graph& g);

// All simple cycles in canonical order.  Throws CapExceeded past `cap`.
std::vector<Subgraph> enumerate_cycles(const Graph& g, std::size_t cap = enumeration_cap());

bool is_planar(const Graph& g);
bool has_two_disjoint_cycles(const Graph& g);
std::vector<Subgraph> blocks(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace gbg
