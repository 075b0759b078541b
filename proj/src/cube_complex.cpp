#include "gbg/cube_complex.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace gbg {

int CubeComplex::add_cube(const std::string& key, const std::vector<int>& facets) {
  if (facets.size() % 2 != 0) throw InvalidInput("cube '" + key + "' has an odd facet count");
  const int d = static_cast<int>(facets.size() / 2);
  if (d < dim()) throw InvalidInput("cube '" + key + "' added out of dimension order");
  if (d > dim() + 1) throw InvalidInput("cube '" + key + "' skips a dimension");
  if (d == dim() + 1) {
    cubes_.emplace_back();
    index_.emplace_back();
    by_facets_.emplace_back();
  }
  if (index_[d].count(key)) throw InvalidInput("duplicate cube key '" + key + "'");
  if (d > 0) {
    std::set<int> distinct(facets.begin(), facets.end());
    if (static_cast<int>(distinct.size()) != 2 * d) {
      throw InvalidInput("cube '" + key + "' has repeated facets");
    }
    for (int f : facets) {
      if (f < 0 || f >= static_cast<int>(cubes_[d - 1].size())) {
        throw InvalidInput("cube '" + key + "' references a missing facet");
      }
    }
    if (!by_facets_[d].emplace(facets, static_cast<int>(cubes_[d].size())).second) {
      throw InvalidInput("cube '" + key + "' duplicates the facets of another cube");
    }
  }
  int id = static_cast<int>(cubes_[d].size());
  cubes_[d].push_back({key, facets});
  index_[d].emplace(key, id);
  return id;
}

std::vector<std::size_t> CubeComplex::cell_counts() const {
  std::vector<std::size_t> out;
  for (const auto& level : cubes_) out.push_back(level.size());
  return out;
}

const std::vector<Cube>& CubeComplex::cubes(int d) const {
  static const std::vector<Cube> kNone;
  return d >= 0 && d <= dim() ? cubes_[d] : kNone;
}

int CubeComplex::find(int d, const std::string& key) const {
  if (d < 0 || d > dim()) return -1;
  auto it = index_[d].find(key);
  return it == index_[d].end() ? -1 : it->second;
}

std::int64_t CubeComplex::euler_characteristic() const {
  std::int64_t chi = 0;
  for (int d = 0; d <= dim(); ++d) {
    chi += (d % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(cubes_[d].size());
  }
  return chi;
}

// ---------------------------------------------------------------- corners

std::pair<int, int> edge_ends(const CubeComplex& x, int edge) {
  const auto& f = x.cube(1, edge).facets;
  return {f[0], f[1]};
}

int corner_edge(const CubeComplex& x, int d, int cube, int dir, const std::vector<int>& corner) {
  int cur = cube;
  int cur_dim = d;
  for (int j = d - 1; j >= 0; --j) {
    if (j == dir) continue;
    cur = x.cube(cur_dim, cur).facets[2 * j + corner[j]];
    --cur_dim;
  }
  return cur;
}

int corner_vertex(const CubeComplex& x, int d, int cube, const std::vector<int>& corner) {
  if (d == 0) return cube;
  if (d == 1) return x.cube(1, cube).facets[corner[0]];
  auto [a0, a1] = edge_ends(x, corner_edge(x, d, cube, 0, corner));
  auto [b0, b1] = edge_ends(x, corner_edge(x, d, cube, 1, corner));
  if (a0 == b0 || a0 == b1) return a0;
  if (a1 == b0 || a1 == b1) return a1;
  throw InvalidInput("cube '" + x.cube(d, cube).key + "' has a corner with no common vertex");
}

namespace {

// +1 when facet (i, b) of a square runs along its coordinate in the direction
// of the edge's own lower-to-upper orientation.
int square_facet_orientation(const CubeComplex& x, int square, int i, int b) {
  std::vector<int> start(2);
  start[i] = b;
  start[1 - i] = 0;
  int v = corner_vertex(x, 2, square, start);
  int e = x.cube(2, square).facets[2 * i + b];
  return edge_ends(x, e).first == v ? 1 : -1;
}

int facet_sign(const CubeComplex& x, int d, int cube, int i, int b) {
  int s = (i % 2 == 0 ? 1 : -1) * (b == 1 ? 1 : -1);
  if (d == 2) s *= square_facet_orientation(x, cube, i, b);
  return s;
}

std::vector<int> corner_bits(int mask, int d) {
  std::vector<int> c(d);
  for (int j = 0; j < d; ++j) c[j] = (mask >> j) & 1;
  return c;
}

}  // namespace

// ---------------------------------------------------------------- homology

SparseMatrix boundary_matrix(const CubeComplex& x, int d) {
  SparseMatrix m;
  m.rows = static_cast<int>(x.count(d));
  m.cols = static_cast<int>(x.count(d - 1));
  m.entries.resize(m.rows);
  if (d <= 0) return m;
  for (int c = 0; c < m.rows; ++c) {
    std::map<int, std::int64_t> row;
    for (int i = 0; i < d; ++i) {
      for (int b = 0; b < 2; ++b) {
        row[x.cube(d, c).facets[2 * i + b]] += facet_sign(x, d, c, i, b);
      }
    }
    for (const auto& [col, v] : row) {
      if (v != 0) m.entries[c].emplace_back(col, v);
    }
  }
  return m;
}

bool boundary_squares_to_zero(const CubeComplex& x) {
  for (int d = 2; d <= x.dim(); ++d) {
    SparseMatrix top = boundary_matrix(x, d);
    SparseMatrix low = boundary_matrix(x, d - 1);
    for (const auto& row : top.entries) {
      std::map<int, std::int64_t> acc;
      for (const auto& [mid, a] : row) {
        for (const auto& [col, b] : low.entries[mid]) acc[col] += a * b;
      }
      for (const auto& [col, v] : acc) {
        if (v != 0) return false;
      }
    }
  }
  return true;
}

HomologySummary homology_summary(const CubeComplex& x, int dim_cap) {
  if (x.dim() > dim_cap) {
    throw Unsupported("complex dimension " + std::to_string(x.dim()) + " exceeds cap " +
                      std::to_string(dim_cap));
  }
  HomologySummary h;
  h.chi = x.euler_characteristic();
  const int top = x.dim();
  std::vector<std::size_t> rank(top + 2, 0);
  for (int d = 1; d <= top; ++d) rank[d] = exact_rank(boundary_matrix(x, d));
  for (int d = 0; d <= top; ++d) h.betti.push_back(x.count(d) - rank[d] - rank[d + 1]);
  return h;
}

Graph one_skeleton(const CubeComplex& x) {
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::string> isolated;
  for (const auto& v : x.cubes(0)) isolated.push_back(v.key);
  for (const auto& e : x.cubes(1)) {
    edges.emplace_back(x.cube(0, e.facets[0]).key, x.cube(0, e.facets[1]).key);
  }
  return Graph(edges, isolated);
}

int component_count(const CubeComplex& x) {
  std::vector<int> parent(x.count(0));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); };
  for (const auto& e : x.cubes(1)) parent[find(e.facets[0])] = find(e.facets[1]);
  int count = 0;
  for (int v = 0; v < static_cast<int>(parent.size()); ++v) count += find(v) == v ? 1 : 0;
  return count;
}

// ---------------------------------------------------------------- links

namespace {

std::vector<VertexLink> all_links(const CubeComplex& x) {
  const int nv = static_cast<int>(x.count(0));
  std::vector<VertexLink> links(nv);
  std::vector<std::map<HalfEdge, int>> index(nv);
  auto vertex_of = [&](int v, HalfEdge h) {
    auto [it, fresh] = index[v].emplace(h, static_cast<int>(links[v].vertices.size()));
    if (fresh) links[v].vertices.push_back(h);
    return it->second;
  };
  for (int e = 0; e < static_cast<int>(x.count(1)); ++e) {
    auto [lo, hi] = edge_ends(x, e);
    links[lo].simplices.push_back({vertex_of(lo, {e, 0})});
    links[hi].simplices.push_back({vertex_of(hi, {e, 1})});
  }
  for (int d = 2; d <= x.dim(); ++d) {
    for (int c = 0; c < static_cast<int>(x.count(d)); ++c) {
      for (int mask = 0; mask < (1 << d); ++mask) {
        auto corner = corner_bits(mask, d);
        int v = corner_vertex(x, d, c, corner);
        std::vector<int> simplex;
        for (int dir = 0; dir < d; ++dir) {
          int e = corner_edge(x, d, c, dir, corner);
          simplex.push_back(vertex_of(v, {e, edge_ends(x, e).first == v ? 0 : 1}));
        }
        std::sort(simplex.begin(), simplex.end());
        links[v].simplices.push_back(simplex);
      }
    }
  }
  return links;
}

bool link_is_flag_simplicial(const VertexLink& link) {
  std::set<std::vector<int>> seen;
  for (const auto& s : link.simplices) {
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) return false;
    if (!seen.insert(s).second) return false;
  }
  const int n = static_cast<int>(link.vertices.size());
  std::vector<Bits> adj(n, Bits(n));
  for (const auto& s : link.simplices) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t j = i + 1; j < s.size(); ++j) {
        adj[s[i]].set(s[j]);
        adj[s[j]].set(s[i]);
      }
    }
  }
  // Every clique must be a simplex; extend cliques in increasing order.
  std::vector<int> clique;
  std::function<bool(const Bits&)> grow = [&](const Bits& candidates) {
    for (auto v = candidates.find_first(); v != Bits::npos; v = candidates.find_next(v)) {
      clique.push_back(static_cast<int>(v));
      if (clique.size() >= 3 && !seen.count(clique)) return false;
      Bits next = candidates & adj[v];
      next &= ~Bits(n).set(0, v + 1, true);
      if (!grow(next)) return false;
      clique.pop_back();
    }
    return true;
  };
  return grow(Bits(n).set());
}

}  // namespace

VertexLink vertex_link(const CubeComplex& x, int vertex) {
  if (vertex < 0 || vertex >= static_cast<int>(x.count(0))) {
    throw InvalidInput("unknown vertex index " + std::to_string(vertex));
  }
  return all_links(x)[vertex];
}

VertexLink vertex_link(const CubeComplex& x, const std::string& vertex_key) {
  int v = x.find(0, vertex_key);
  if (v < 0) throw InvalidInput("unknown vertex '" + vertex_key + "'");
  return vertex_link(x, v);
}

bool is_npc(const CubeComplex& x, int dim_cap) {
  if (x.dim() > dim_cap) {
    throw Unsupported("complex dimension " + std::to_string(x.dim()) + " exceeds cap " +
                      std::to_string(dim_cap));
  }
  for (const auto& link : all_links(x)) {
    if (!link_is_flag_simplicial(link)) return false;
  }
  return true;
}

// ---------------------------------------------------------------- hyperplanes

namespace {

void require_square_complex(const CubeComplex& x, const char* what) {
  if (x.dim() > 2) {
    throw Unsupported(std::string(what) + " is only available for square complexes (dim <= 2)");
  }
}

// Union-find over edges that also tracks whether two parallel edges point the
// same way across the squares joining them.
struct ParallelClasses {
  std::vector<int> parent;
  std::vector<int> parity;  // orientation relative to parent
  std::set<int> one_sided_roots;

  explicit ParallelClasses(int n) : parent(n), parity(n, 0) { std::iota(parent.begin(), parent.end(), 0); }

  std::pair<int, int> find(int a) {
    if (parent[a] == a) return {a, 0};
    auto [root, p] = find(parent[a]);
    parent[a] = root;
    parity[a] ^= p;
    return {root, parity[a]};
  }

  void join(int a, int b, int relative) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) {
      if ((pa ^ pb) != relative) one_sided_roots.insert(ra);
      return;
    }
    bool flagged = one_sided_roots.erase(rb) > 0;
    parent[rb] = ra;
    parity[rb] = pa ^ pb ^ relative;
    if (flagged) one_sided_roots.insert(ra);
  }
};

struct ClassData {
  std::vector<Hyperplane> planes;
  std::vector<int> class_of;  // per edge
  std::set<int> one_sided;
};

ClassData classify_edges(const CubeComplex& x) {
  const int ne = static_cast<int>(x.count(1));
  ParallelClasses uf(ne);
  for (int s = 0; s < static_cast<int>(x.count(2)); ++s) {
    const auto& f = x.cube(2, s).facets;
    for (int i = 0; i < 2; ++i) {
      int o0 = square_facet_orientation(x, s, i, 0);
      int o1 = square_facet_orientation(x, s, i, 1);
      uf.join(f[2 * i], f[2 * i + 1], o0 == o1 ? 0 : 1);
    }
  }
  std::map<int, int> root_to_class;
  ClassData out;
  out.class_of.assign(ne, -1);
  for (int e = 0; e < ne; ++e) {
    int root = uf.find(e).first;
    auto [it, fresh] = root_to_class.emplace(root, static_cast<int>(out.planes.size()));
    if (fresh) out.planes.emplace_back();
    out.planes[it->second].edge_class.push_back(e);
    out.class_of[e] = it->second;
  }
  for (int root : uf.one_sided_roots) out.one_sided.insert(root_to_class.at(uf.find(root).first));
  return out;
}

}  // namespace

std::vector<Hyperplane> hyperplanes(const CubeComplex& x) {
  require_square_complex(x, "hyperplanes");
  return classify_edges(x).planes;
}

SpecialnessReport specialness_report(const CubeComplex& x) {
  require_square_complex(x, "specialness_report");
  ClassData data = classify_edges(x);
  SpecialnessReport report;
  report.one_sided.assign(data.one_sided.begin(), data.one_sided.end());

  std::set<int> self_intersecting;
  std::set<std::pair<int, int>> crossing;
  for (const auto& sq : x.cubes(2)) {
    int a = data.class_of[sq.facets[0]];
    int b = data.class_of[sq.facets[2]];
    if (a == b) {
      self_intersecting.insert(a);
    } else {
      crossing.emplace(std::min(a, b), std::max(a, b));
    }
  }

  std::set<int> self_osculating;
  std::set<std::pair<int, int>> osculating;
  for (const auto& link : all_links(x)) {
    std::set<std::pair<int, int>> corners;
    for (const auto& s : link.simplices) {
      if (s.size() == 2) corners.emplace(s[0], s[1]);
    }
    const int n = static_cast<int>(link.vertices.size());
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (corners.count({i, j})) continue;
        int a = data.class_of[link.vertices[i].edge];
        int b = data.class_of[link.vertices[j].edge];
        if (a == b) {
          self_osculating.insert(a);
        } else {
          osculating.emplace(std::min(a, b), std::max(a, b));
        }
      }
    }
  }
  report.self_intersecting.assign(self_intersecting.begin(), self_intersecting.end());
  report.self_osculating.assign(self_osculating.begin(), self_osculating.end());
  for (const auto& p : osculating) {
    if (crossing.count(p)) report.inter_osculating.push_back(p);
  }
  return report;
}

bool is_closed_surface(const CubeComplex& x) {
  if (x.dim() != 2) return false;
  std::vector<int> squares_per_edge(x.count(1), 0);
  for (const auto& sq : x.cubes(2)) {
    for (int f : sq.facets) ++squares_per_edge[f];
  }
  for (int c : squares_per_edge) {
    if (c != 2) return false;
  }
  for (const auto& link : all_links(x)) {
    const int n = static_cast<int>(link.vertices.size());
    if (n < 3) return false;
    std::vector<int> deg(n, 0);
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); };
    std::set<std::vector<int>> arcs;
    for (const auto& s : link.simplices) {
      if (s.size() != 2) continue;
      if (s[0] == s[1] || !arcs.insert(s).second) return false;
      ++deg[s[0]];
      ++deg[s[1]];
      parent[find(s[0])] = find(s[1]);
    }
    for (int i = 0; i < n; ++i) {
      if (deg[i] != 2 || find(i) != find(0)) return false;
    }
  }
  return true;
}

}  // namespace gbg
