#include "gbg/intersection_complex.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "gbg/exact_rank.hpp"

namespace gbg {

namespace {

struct Factors {
  Subgraph first;
  Subgraph second;
};

bool nonempty(const Factors& f) { return !f.first.empty() && !f.second.empty(); }

std::vector<IntersectionPiece> split(const std::vector<Factors>& states) {
  std::vector<IntersectionPiece> out;
  for (const auto& st : states) {
    for (const auto& x : connected_components(st.first)) {
      for (const auto& y : connected_components(st.second)) {
        bool standard = !x.trivial() && !y.trivial() && is_leafless(x) && is_leafless(y);
        out.push_back({x, y, standard});
      }
    }
  }
  return out;
}

// Intersections of products as unions over consistent factor choices; the
// orientation of the first product is fixed so each choice appears once.
std::vector<Factors> extend(const std::vector<Factors>& states, const StandardPair& p) {
  std::vector<Factors> out;
  for (const auto& st : states) {
    Factors same{st.first.intersected(p.first), st.second.intersected(p.second)};
    Factors swapped{st.first.intersected(p.second), st.second.intersected(p.first)};
    if (nonempty(same)) out.push_back(std::move(same));
    if (nonempty(swapped)) out.push_back(std::move(swapped));
  }
  return out;
}

std::string describe(const std::vector<StandardPair>& products, const std::vector<int>& subset) {
  std::string out;
  for (int i : subset) {
    if (!out.empty()) out += ", ";
    out += products[i].first.to_string() + " x " + products[i].second.to_string();
  }
  return "[" + out + "]";
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

void visit_product_intersections(const Graph& g, const std::vector<StandardPair>& products, int max_size,
                                 const IntersectionVisitor& visit) {
  (void)g;
  const std::size_t cap = enumeration_cap();
  std::size_t visited = 0;
  std::vector<int> subset;

  std::function<bool(int, const std::vector<Factors>&)> descend = [&](int from,
                                                                      const std::vector<Factors>& states) {
    if (++visited > cap) throw CapExceeded("product intersection enumeration exceeded cap");
    if (visit(subset, split(states))) return true;
    if (max_size >= 0 && static_cast<int>(subset.size()) >= max_size) return false;
    for (int j = from; j < static_cast<int>(products.size()); ++j) {
      auto next = extend(states, products[j]);
      if (next.empty()) continue;
      subset.push_back(j);
      bool stop = descend(j + 1, next);
      subset.pop_back();
      if (stop) return true;
    }
    return false;
  };

  for (int i = 0; i < static_cast<int>(products.size()); ++i) {
    if (max_size == 0) return;
    subset = {i};
    if (descend(i + 1, {Factors{products[i].first, products[i].second}})) return;
  }
}

int IntersectionComplex::find(const std::vector<int>& vertex_set) const {
  const int d = static_cast<int>(vertex_set.size()) - 1;
  if (d < 0 || d > dim()) return -1;
  const auto& level = simplices[d];
  auto it = std::lower_bound(level.begin(), level.end(), vertex_set,
                             [](const Simplex& s, const std::vector<int>& key) { return s.vertices < key; });
  if (it == level.end() || it->vertices != vertex_set) return -1;
  return static_cast<int>(it - level.begin());
}

IntersectionComplex build_intersection_complex(const Graph& g) {
  IntersectionComplex ic;
  ic.vertices = maximal_products(g);
  visit_product_intersections(g, ic.vertices, -1, [&](const std::vector<int>& subset, const auto& pieces) {
    if (pieces.size() > 1) {
      throw Unsupported("intersection of " + describe(ic.vertices, subset) + " has " +
                        std::to_string(pieces.size()) + " components");
    }
    if (!pieces[0].standard) {
      throw Unsupported("intersection of " + describe(ic.vertices, subset) +
                        " is not a standard product subcomplex");
    }
    const std::size_t d = subset.size() - 1;
    if (ic.simplices.size() <= d) ic.simplices.resize(d + 1);
    ic.simplices[d].push_back({subset, make_standard_pair(pieces[0].first, pieces[0].second)});
    return false;
  });
  for (auto& level : ic.simplices) {
    std::sort(level.begin(), level.end(),
              [](const Simplex& a, const Simplex& b) { return a.vertices < b.vertices; });
  }
  return ic;
}

AbstractGraph icomplex_one_skeleton(const Graph& g) {
  auto products = maximal_products(g);
  AbstractGraph out;
  out.n = static_cast<int>(products.size());
  for (int i = 0; i < out.n; ++i) {
    for (int j = i + 1; j < out.n; ++j) {
      auto states = extend({Factors{products[i].first, products[i].second}}, products[j]);
      bool adjacent = false;
      for (const auto& piece : split(states)) {
        if (!leafless_core(piece.first).trivial() && !leafless_core(piece.second).trivial()) adjacent = true;
      }
      if (adjacent) out.edges.emplace_back(i, j);
    }
  }
  return out;
}

IcAnalysis ic_analysis(const IntersectionComplex& ic) {
  IcAnalysis out;
  const int n = static_cast<int>(ic.vertices.size());
  const std::vector<Simplex> none;
  const auto& edges = ic.dim() >= 1 ? ic.simplices[1] : none;
  const auto& triangles = ic.dim() >= 2 ? ic.simplices[2] : none;

  UnionFind uf(n);
  for (const auto& e : edges) uf.unite(e.vertices[0], e.vertices[1]);
  int roots = 0;
  for (int v = 0; v < n; ++v) roots += uf.find(v) == v ? 1 : 0;
  out.connected = roots == 1;

  SparseMatrix d1{static_cast<int>(edges.size()), n, {}};
  for (const auto& e : edges) d1.entries.push_back({{e.vertices[0], -1}, {e.vertices[1], 1}});
  SparseMatrix d2{static_cast<int>(triangles.size()), static_cast<int>(edges.size()), {}};
  for (const auto& t : triangles) {
    const auto& v = t.vertices;
    std::vector<std::pair<int, std::int64_t>> row = {
        {ic.find({v[1], v[2]}), 1}, {ic.find({v[0], v[2]}), -1}, {ic.find({v[0], v[1]}), 1}};
    std::sort(row.begin(), row.end());
    d2.entries.push_back(std::move(row));
  }
  out.skeleton_betti1 = edges.size() - exact_rank(d1) - exact_rank(d2);

  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const auto& e : edges) adj[e.vertices[0]][e.vertices[1]] = adj[e.vertices[1]][e.vertices[0]] = true;
  std::vector<int> clique;
  std::function<bool(int)> all_cliques_filled = [&](int from) {
    if (clique.size() >= 3 && ic.find(clique) < 0) return false;
    for (int v = from; v < n; ++v) {
      if (!std::all_of(clique.begin(), clique.end(), [&](int u) { return adj[u][v]; })) continue;
      clique.push_back(v);
      bool ok = all_cliques_filled(v + 1);
      clique.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  out.flag = all_cliques_filled(0);
  out.simplex = n > 0 && ic.dim() == n - 1 && ic.count(n - 1) == 1;
  return out;
}

IntersectionComplex sub_complex(const IntersectionComplex& ic, const std::function<bool(const Simplex&)>& keep) {
  IntersectionComplex out;
  out.vertices = ic.vertices;
  for (const auto& level : ic.simplices) {
    std::vector<Simplex> kept;
    for (const auto& s : level) {
      if (keep(s)) kept.push_back(s);
    }
    if (kept.empty()) break;
    out.simplices.push_back(std::move(kept));
  }
  return out;
}

}  // namespace gbg
