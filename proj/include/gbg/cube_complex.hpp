#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gbg/exact_rank.hpp"
#include "gbg/graph.hpp"

namespace gbg {

constexpr int kHomologyDimCap = 6;

// A d-cube lists its 2d facets as (lower_0, upper_0, lower_1, upper_1, ...),
// indices into the (d-1)-cubes.  Facet (i, b) is the face where coordinate i
// is fixed to b; its own coordinates are the remaining ones in order.
struct Cube {
  std::string key;
  std::vector<int> facets;
  int dim() const { return static_cast<int>(facets.size() / 2); }
};

class CubeComplex {
 public:
  // Cubes are added in nondecreasing dimension.  Throws InvalidInput on a
  // duplicate key, a missing or repeated facet, or a duplicated facet tuple.
  int add_cube(const std::string& key, const std::vector<int>& facets);

  // -1 for the empty complex.
  int dim() const { return static_cast<int>(cubes_.size()) - 1; }
  bool empty() const { return cubes_.empty(); }
  std::size_t count(int d) const { return d <= dim() && d >= 0 ? cubes_[d].size() : 0; }
  std::vector<std::size_t> cell_counts() const;
  const std::vector<Cube>& cubes(int d) const;
  const Cube& cube(int d, int i) const { return cubes_[d][i]; }
  // -1 when absent.
  int find(int d, const std::string& key) const;

  std::int64_t euler_characteristic() const;

  // Free-form annotations, e.g. whether the source graph was sufficiently
  // subdivided.
  std::map<std::string, std::string> metadata;

 private:
  std::vector<std::vector<Cube>> cubes_;
  std::vector<std::map<std::string, int>> index_;
  std::vector<std::map<std::vector<int>, int>> by_facets_;
};

// Vertices (0-cubes) at the two ends of edge i, lower first.
std::pair<int, int> edge_ends(const CubeComplex& x, int edge);
// The 1-face of a d-cube in direction `dir` at `corner` (one bit per coordinate).
int corner_edge(const CubeComplex& x, int d, int cube, int dir, const std::vector<int>& corner);
// The vertex of a d-cube at `corner`.
int corner_vertex(const CubeComplex& x, int d, int cube, const std::vector<int>& corner);

// Rows are d-cubes, columns (d-1)-cubes, standard alternating signs.
SparseMatrix boundary_matrix(const CubeComplex& x, int d);
// True when every composite boundary map vanishes exactly.
bool boundary_squares_to_zero(const CubeComplex& x);

struct HomologySummary {
  std::int64_t chi = 0;
  std::vector<std::size_t> betti;
};
// Rational Betti numbers; throws Unsupported when dim exceeds `dim_cap`.
HomologySummary homology_summary(const CubeComplex& x, int dim_cap = kHomologyDimCap);

Graph one_skeleton(const CubeComplex& x);
int component_count(const CubeComplex& x);

struct HalfEdge {
  int edge;
  int end;  // 0 = lower endpoint, 1 = upper endpoint
  auto operator<=>(const HalfEdge&) const = default;
};

// Simplices come from the corners of cubes of dimension >= 1 at the vertex,
// one per corner, so a non-simplicial link shows up as repeated simplices.
struct VertexLink {
  std::vector<HalfEdge> vertices;
  std::vector<std::vector<int>> simplices;
};
// Throws InvalidInput for an unknown vertex.
VertexLink vertex_link(const CubeComplex& x, int vertex);
VertexLink vertex_link(const CubeComplex& x, const std::string& vertex_key);

bool is_npc(const CubeComplex& x, int dim_cap = kHomologyDimCap);

struct Hyperplane {
  std::vector<int> edge_class;  // 1-cube indices, increasing
};
// Throws Unsupported when dim > 2.
std::vector<Hyperplane> hyperplanes(const CubeComplex& x);

struct SpecialnessReport {
  std::vector<int> self_intersecting;
  std::vector<int> self_osculating;
  std::vector<int> one_sided;
  std::vector<std::pair<int, int>> inter_osculating;
  bool special() const {
    return self_intersecting.empty() && self_osculating.empty() && one_sided.empty() &&
           inter_osculating.empty();
  }
};
// Hyperplane indices refer to hyperplanes(x).  Throws Unsupported when dim > 2.
SpecialnessReport specialness_report(const CubeComplex& x);

bool is_closed_surface(const CubeComplex& x);

}  // namespace gbg
