#include "support/oracles.hpp"

#include <algorithm>
#include <bitset>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace oracle {

using gbg::Graph;

namespace {

constexpr int kMaxBruteEdges = 24;

bool bit(Mask m, int i) { return (m >> i & 1) != 0; }

std::vector<int> degrees(const Graph& g, Mask edges) {
  std::vector<int> deg(g.num_vertices(), 0);
  for (int e = 0; e < g.num_edges(); ++e) {
    if (bit(edges, e)) {
      ++deg[g.edge(e).u];
      ++deg[g.edge(e).v];
    }
  }
  return deg;
}

bool connected_mask(const Graph& g, Mask edges) {
  std::vector<int> parent(g.num_vertices());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); };
  for (int e = 0; e < g.num_edges(); ++e) {
    if (bit(edges, e)) parent[find(g.edge(e).u)] = find(g.edge(e).v);
  }
  std::set<int> roots;
  for (int v : vertices_of(g, edges)) roots.insert(find(v));
  return roots.size() == 1;
}

bool leafless_mask(const Graph& g, Mask edges) {
  if (edges == 0) return false;
  for (int d : degrees(g, edges)) {
    if (d == 1) return false;
  }
  return true;
}

void require_small(const Graph& g) {
  if (g.num_edges() > kMaxBruteEdges) throw std::logic_error("graph too large for brute force");
}

std::set<Pair> product_of(const Graph& g, const std::set<int>& xv, Mask xe, const std::set<int>& yv, Mask ye) {
  std::vector<Cell> xs, ys;
  for (int v : xv) xs.push_back({v, -1});
  for (int v : yv) ys.push_back({v, -1});
  for (int e = 0; e < g.num_edges(); ++e) {
    if (bit(xe, e)) xs.push_back({g.edge(e).u, g.edge(e).v});
    if (bit(ye, e)) ys.push_back({g.edge(e).u, g.edge(e).v});
  }
  std::set<Pair> out;
  for (const auto& a : xs) {
    for (const auto& b : ys) out.insert(make_pair(a, b));
  }
  return out;
}

std::vector<Pair> faces(const Pair& p) {
  std::vector<Pair> out;
  for (int side = 0; side < 2; ++side) {
    const Cell& c = side == 0 ? p.first : p.second;
    const Cell& other = side == 0 ? p.second : p.first;
    if (c.second < 0) continue;
    out.push_back(make_pair({c.first, -1}, other));
    out.push_back(make_pair({c.second, -1}, other));
  }
  return out;
}

// Reads a component as X x Y when it is one; returns the factors.
std::optional<std::pair<Mask, Mask>> as_standard_product(const Graph& g, const std::set<Pair>& comp) {
  std::map<int, std::set<int>> adj;
  for (const auto& p : comp) {
    if (p.first.second < 0 && p.second.second < 0) {
      adj[p.first.first].insert(p.second.first);
      adj[p.second.first].insert(p.first.first);
    }
  }
  if (adj.empty()) return std::nullopt;
  std::map<int, int> color;
  std::vector<int> stack{adj.begin()->first};
  color[stack.back()] = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v]) {
      auto it = color.find(w);
      if (it == color.end()) {
        color[w] = 1 - color[v];
        stack.push_back(w);
      } else if (it->second == color[v]) {
        return std::nullopt;
      }
    }
  }
  std::set<int> side[2];
  for (const auto& [v, c] : color) side[c].insert(v);
  Mask edges[2] = {0, 0};
  for (const auto& p : comp) {
    for (int k = 0; k < 2; ++k) {
      const Cell& c = k == 0 ? p.first : p.second;
      if (c.second < 0) continue;
      int e = g.edge_between(c.first, c.second);
      edges[side[0].count(c.first) ? 0 : 1] |= Mask{1} << e;
    }
  }
  if (product_of(g, side[0], edges[0], side[1], edges[1]) != comp) return std::nullopt;
  for (int k = 0; k < 2; ++k) {
    if (!leafless_mask(g, edges[k]) || !connected_mask(g, edges[k]) || vertices_of(g, edges[k]) != side[k]) {
      return std::nullopt;
    }
  }
  return std::make_pair(std::min(edges[0], edges[1]), std::max(edges[0], edges[1]));
}

}  // namespace

std::set<int> vertices_of(const Graph& g, Mask edges) {
  std::set<int> out;
  for (int e = 0; e < g.num_edges(); ++e) {
    if (bit(edges, e)) {
      out.insert(g.edge(e).u);
      out.insert(g.edge(e).v);
    }
  }
  return out;
}

std::vector<Mask> cycles(const Graph& g) {
  std::vector<Mask> out;
  for (Mask m : connected_leafless(g)) {
    auto deg = degrees(g, m);
    if (std::all_of(deg.begin(), deg.end(), [](int d) { return d == 0 || d == 2; })) out.push_back(m);
  }
  return out;
}

std::vector<Mask> connected_leafless(const Graph& g) {
  require_small(g);
  std::vector<Mask> out;
  for (Mask m = 1; m < (Mask{1} << g.num_edges()); ++m) {
    if (leafless_mask(g, m) && connected_mask(g, m)) out.push_back(m);
  }
  return out;
}

Mask prune_to_core(const Graph& g, const std::set<int>& vertices) {
  std::set<int> alive = vertices;
  for (;;) {
    Mask edges = 0;
    for (int e = 0; e < g.num_edges(); ++e) {
      if (alive.count(g.edge(e).u) && alive.count(g.edge(e).v)) edges |= Mask{1} << e;
    }
    auto deg = degrees(g, edges);
    std::set<int> next;
    for (int v : alive) {
      if (deg[v] >= 2) next.insert(v);
    }
    if (next == alive) return edges;
    alive = std::move(next);
  }
}

Mask complement_core(const Graph& g, Mask s) {
  std::set<int> used = vertices_of(g, s), rest;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (!used.count(v)) rest.insert(v);
  }
  return prune_to_core(g, rest);
}

std::vector<Mask> maximally_standard(const Graph& g) {
  std::vector<Mask> out;
  for (Mask s : connected_leafless(g)) {
    Mask perp = complement_core(g, s);
    if (perp == 0 || !connected_mask(g, perp)) continue;
    if (complement_core(g, perp) == s) out.push_back(s);
  }
  return out;
}

std::set<std::pair<Mask, Mask>> maximal_pairs(const Graph& g) {
  std::set<std::pair<Mask, Mask>> out;
  for (Mask s : maximally_standard(g)) {
    Mask perp = complement_core(g, s);
    out.insert({std::min(s, perp), std::max(s, perp)});
  }
  return out;
}

std::vector<Cell> cells(const Graph& g) {
  std::vector<Cell> out;
  for (int v = 0; v < g.num_vertices(); ++v) out.push_back({v, -1});
  for (const auto& e : g.edges()) out.push_back({e.u, e.v});
  return out;
}

std::map<std::pair<Cell, Cell>, bool> separability_table(const Graph& g) {
  const auto all = cells(g);
  if (all.size() > 128) throw std::logic_error("too many cells");
  const int nv = g.num_vertices();
  auto cell_index = [&](const Cell& c) { return c.second < 0 ? c.first : nv + g.edge_between(c.first, c.second); };

  const auto leafless = connected_leafless(g);
  std::vector<std::bitset<128>> contained(leafless.size());
  std::vector<std::set<int>> verts(leafless.size());
  for (std::size_t i = 0; i < leafless.size(); ++i) {
    verts[i] = vertices_of(g, leafless[i]);
    for (int v : verts[i]) contained[i].set(v);
    for (int e = 0; e < g.num_edges(); ++e) {
      if (bit(leafless[i], e)) contained[i].set(nv + e);
    }
  }
  std::vector<std::bitset<128>> partner(all.size());
  for (std::size_t i = 0; i < leafless.size(); ++i) {
    for (std::size_t j = 0; j < leafless.size(); ++j) {
      bool disjoint = std::none_of(verts[i].begin(), verts[i].end(), [&](int v) { return verts[j].count(v) > 0; });
      if (!disjoint) continue;
      for (std::size_t c = 0; c < all.size(); ++c) {
        if (contained[i].test(c)) partner[c] |= contained[j];
      }
    }
  }
  std::map<std::pair<Cell, Cell>, bool> out;
  for (const auto& a : all) {
    for (const auto& b : all) {
      std::set<int> va{a.first}, vb{b.first};
      if (a.second >= 0) va.insert(a.second);
      if (b.second >= 0) vb.insert(b.second);
      bool disjoint = std::none_of(va.begin(), va.end(), [&](int v) { return vb.count(v) > 0; });
      if (!disjoint) continue;
      out[{a, b}] = partner[cell_index(a)].test(cell_index(b));
    }
  }
  return out;
}

std::vector<std::int64_t> ud_cell_counts(const Graph& g, int n) {
  const auto all = cells(g);
  std::vector<std::int64_t> counts(n + 1, 0);
  std::vector<int> used(g.num_vertices(), 0);
  std::function<void(std::size_t, int, int)> pick = [&](std::size_t from, int left, int edges) {
    if (left == 0) {
      ++counts[edges];
      return;
    }
    for (std::size_t i = from; i < all.size(); ++i) {
      const Cell& c = all[i];
      if (used[c.first] || (c.second >= 0 && used[c.second])) continue;
      used[c.first] = 1;
      if (c.second >= 0) used[c.second] = 1;
      pick(i + 1, left - 1, edges + (c.second >= 0 ? 1 : 0));
      used[c.first] = 0;
      if (c.second >= 0) used[c.second] = 0;
    }
  };
  pick(0, n, 0);
  while (counts.size() > 1 && counts.back() == 0) counts.pop_back();
  if (counts.size() == 1 && counts[0] == 0) counts.clear();
  return counts;
}

Pair make_pair(Cell a, Cell b) { return a < b ? Pair{a, b} : Pair{b, a}; }

std::set<Pair> product_cells(const Graph& g, Mask a, Mask b) {
  return product_of(g, vertices_of(g, a), a, vertices_of(g, b), b);
}

std::optional<CellComplex> intersection_complex(const Graph& g) {
  CellComplex out;
  for (const auto& p : maximal_pairs(g)) out.vertices.push_back(p);
  std::vector<std::set<Pair>> sets;
  for (const auto& [a, b] : out.vertices) sets.push_back(product_cells(g, a, b));

  bool ok = true;
  std::vector<int> subset;
  std::function<void(int, const std::set<Pair>&)> grow = [&](int from, const std::set<Pair>& current) {
    // components under the face relation
    std::map<Pair, Pair> parent;
    for (const auto& p : current) parent[p] = p;
    std::function<Pair(const Pair&)> find = [&](const Pair& p) {
      Pair& q = parent[p];
      if (q == p) return p;
      q = find(q);
      return q;
    };
    for (const auto& p : current) {
      for (const auto& f : faces(p)) {
        if (current.count(f)) parent[find(p)] = find(f);
      }
    }
    std::map<Pair, std::set<Pair>> comps;
    for (const auto& p : current) comps[find(p)].insert(p);
    if (comps.size() != 1) {
      ok = false;
      return;
    }
    auto label = as_standard_product(g, comps.begin()->second);
    if (!label) {
      ok = false;
      return;
    }
    out.simplices.insert(subset);
    out.labels[subset] = *label;
    for (int j = from; j < static_cast<int>(sets.size()) && ok; ++j) {
      std::set<Pair> next;
      std::set_intersection(current.begin(), current.end(), sets[j].begin(), sets[j].end(),
                            std::inserter(next, next.begin()));
      if (next.empty()) continue;
      subset.push_back(j);
      grow(j + 1, next);
      subset.pop_back();
    }
  };
  for (int i = 0; i < static_cast<int>(sets.size()) && ok; ++i) {
    subset = {i};
    grow(i + 1, sets[i]);
  }
  if (!ok) return std::nullopt;
  return out;
}

int feedback_vertex_number(const Graph& g) {
  const int n = g.num_vertices();
  for (int k = 0; k <= n; ++k) {
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + k, true);
    do {
      std::vector<int> parent(n);
      std::iota(parent.begin(), parent.end(), 0);
      std::function<int(int)> find = [&](int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); };
      bool acyclic = true;
      for (const auto& e : g.edges()) {
        if (pick[e.u] || pick[e.v]) continue;
        int a = find(e.u), b = find(e.v);
        if (a == b) {
          acyclic = false;
          break;
        }
        parent[a] = b;
      }
      if (acyclic) return k;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return n;
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::int64_t out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

}  // namespace oracle

namespace oracle {

namespace {

constexpr std::int64_t kPrime = 2147483647;

std::int64_t power_mod(std::int64_t b, std::int64_t e) {
  std::int64_t r = 1;
  b %= kPrime;
  while (e > 0) {
    if (e & 1) r = r * b % kPrime;
    b = b * b % kPrime;
    e >>= 1;
  }
  return r;
}

std::int64_t rank_mod_prime(std::vector<std::vector<std::int64_t>> m) {
  std::int64_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < static_cast<std::int64_t>(m.size()); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[rank]);
    const std::int64_t inv = power_mod(m[rank][c], kPrime - 2);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == static_cast<std::size_t>(rank) || m[r][c] == 0) continue;
      const std::int64_t f = m[r][c] * inv % kPrime;
      for (std::size_t k = c; k < cols; ++k) {
        m[r][k] = ((m[r][k] - f * m[rank][k]) % kPrime + kPrime) % kPrime;
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::int64_t ud2_betti1(const Graph& g) {
  const auto all = cells(g);
  std::map<Pair, int> index[3];
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      const Cell& a = all[i];
      const Cell& b = all[j];
      std::set<int> touched{a.first, b.first};
      std::size_t expected = 2;
      if (a.second >= 0) touched.insert(a.second), ++expected;
      if (b.second >= 0) touched.insert(b.second), ++expected;
      if (touched.size() != expected) continue;
      const int dim = (a.second >= 0) + (b.second >= 0);
      const Pair p = make_pair(a, b);
      index[dim].emplace(p, static_cast<int>(index[dim].size()));
    }
  }
  auto vertex_cell = [](int v) { return Cell{v, -1}; };
  // Columns are cells of dimension d, rows cells of dimension d - 1.
  auto boundary = [&](int d) {
    std::vector<std::vector<std::int64_t>> m(index[d - 1].size(), std::vector<std::int64_t>(index[d].size(), 0));
    for (const auto& [p, col] : index[d]) {
      auto add = [&](const Pair& face, int sign) {
        m[index[d - 1].at(face)][col] = (m[index[d - 1].at(face)][col] + sign + kPrime) % kPrime;
      };
      if (d == 1) {
        const Cell& e = p.first.second >= 0 ? p.first : p.second;
        const Cell& v = p.first.second >= 0 ? p.second : p.first;
        add(make_pair(v, vertex_cell(e.second)), 1);
        add(make_pair(v, vertex_cell(e.first)), -1);
      } else {
        const Cell& x = p.first;
        const Cell& y = p.second;
        add(make_pair(x, vertex_cell(y.second)), 1);
        add(make_pair(x, vertex_cell(y.first)), -1);
        add(make_pair(vertex_cell(x.second), y), -1);
        add(make_pair(vertex_cell(x.first), y), 1);
      }
    }
    return m;
  };
  const std::int64_t edges = static_cast<std::int64_t>(index[1].size());
  if (edges == 0) return 0;
  const std::int64_t r1 = index[0].empty() ? 0 : rank_mod_prime(boundary(1));
  const std::int64_t r2 = index[2].empty() ? 0 : rank_mod_prime(boundary(2));
  return edges - r1 - r2;
}

}  // namespace oracle
