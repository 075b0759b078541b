#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "gbg/graph.hpp"
#include "gbg/product_analysis.hpp"

namespace gbg {

// One connected component of an intersection of product subcomplexes.  The
// component is first x second (both connected, possibly single vertices);
// `standard` says whether it is itself a standard product subcomplex.
struct IntersectionPiece {
  Subgraph first;
  Subgraph second;
  bool standard = false;
};

using IntersectionVisitor =
    std::function<bool(const std::vector<int>& subset, const std::vector<IntersectionPiece>& pieces)>;

// Visits every subset (increasing indices, size <= max_size unless max_size < 0)
// of `products` whose cell intersection is nonempty, with that intersection
// split into components.  Stops when `visit` returns true.  Throws CapExceeded
// when the number of visited subsets exceeds enumeration_cap().
void visit_product_intersections(const Graph& g, const std::vector<StandardPair>& products, int max_size,
                                 const IntersectionVisitor& visit);

struct Simplex {
  std::vector<int> vertices;  // increasing indices into IntersectionComplex::vertices
  StandardPair label;
  bool operator==(const Simplex& o) const { return vertices == o.vertices && label == o.label; }
};

struct IntersectionComplex {
  std::vector<StandardPair> vertices;
  std::vector<std::vector<Simplex>> simplices;  // by dimension, each sorted by vertex tuple

  int dim() const { return static_cast<int>(simplices.size()) - 1; }
  std::size_t count(int d) const { return d >= 0 && d <= dim() ? simplices[d].size() : 0; }
  // -1 when absent.
  int find(const std::vector<int>& vertex_set) const;
  bool operator==(const IntersectionComplex& o) const {
    return vertices == o.vertices && simplices == o.simplices;
  }
};

// Throws Unsupported when an intersection has a non-standard component or
// more than one component (a multi-simplex).
IntersectionComplex build_intersection_complex(const Graph& g);

// Vertices = maximal products; i ~ j when the intersection of the two products
// contains a standard product subcomplex.  Defined without the standard
// intersection property.
AbstractGraph icomplex_one_skeleton(const Graph& g);

struct IcAnalysis {
  bool connected = false;
  std::size_t skeleton_betti1 = 0;  // b1 of the 2-skeleton
  bool flag = false;
  bool simplex = false;  // a single top simplex on all vertices
};
IcAnalysis ic_analysis(const IntersectionComplex& ic);

// Keeps the simplices accepted by `keep`; faces of kept simplices must be kept.
IntersectionComplex sub_complex(const IntersectionComplex& ic, const std::function<bool(const Simplex&)>& keep);

}  // namespace gbg
