#include "gbg/product_analysis.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "gbg/grapes.hpp"
#include "gbg/intersection_complex.hpp"

namespace gbg {

StandardPair make_standard_pair(const Subgraph& a, const Subgraph& b) {
  return b < a ? StandardPair{b, a} : StandardPair{a, b};
}

bool is_standard_pair(const StandardPair& p) {
  for (const Subgraph* s : {&p.first, &p.second}) {
    if (s->trivial() || !is_leafless(*s) || !is_connected(*s)) return false;
  }
  return p.first.vertex_disjoint(p.second);
}

namespace {

// Leafless core of the subgraph induced on the complement of a vertex set.
Subgraph core_avoiding(const Graph& g, const Bits& removed) {
  return leafless_core(Subgraph::induced(g, ~removed));
}

bool covered_by(const Subgraph& part, const Subgraph& whole) { return whole.contains(part); }

}  // namespace

Subgraph orthogonal_complement(const Graph& g, const Subgraph& s) {
  if (!is_leafless(s)) throw InvalidInput("orthogonal complement needs a leafless subgraph");
  return core_avoiding(g, s.vertex_set());
}

bool is_maximally_standard(const Graph& g, const Subgraph& s) {
  if (s.trivial() || !is_leafless(s) || !is_connected(s)) return false;
  Subgraph perp = orthogonal_complement(g, s);
  if (perp.trivial() || !is_connected(perp)) return false;
  return orthogonal_complement(g, perp) == s;
}

// ---------------------------------------------------------------- maximal products

std::vector<Subgraph> enumerate_maximally_standard(const Graph& g) {
  const std::size_t cap = enumeration_cap();
  std::vector<Subgraph> cycles = enumerate_cycles(g, cap);

  std::set<Subgraph> found;
  std::vector<Subgraph> order;
  auto consider = [&](const Subgraph& candidate) {
    if (found.count(candidate) || !is_maximally_standard(g, candidate)) return;
    found.insert(candidate);
    order.push_back(candidate);
    if (found.size() > cap) throw CapExceeded("maximally standard enumeration exceeded cap");
  };
  auto consider_components = [&](const Bits& removed) {
    for (const auto& comp : connected_components(core_avoiding(g, removed))) consider(comp);
  };

  std::set<Bits> seeds;
  for (const auto& c : cycles) {
    if (seeds.insert(c.vertex_set()).second) consider_components(c.vertex_set());
  }
  // Close under complements and under complements of disjoint unions.
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Subgraph current = order[i];
    consider(orthogonal_complement(g, current));
    consider_components(current.vertex_set());
    for (std::size_t j = 0; j < i; ++j) {
      const Subgraph other = order[j];
      if (!current.vertex_disjoint(other)) continue;
      consider_components(current.vertex_set() | other.vertex_set());
    }
    for (const auto& c : cycles) {
      if (!current.vertex_disjoint(c)) continue;
      consider_components(current.vertex_set() | c.vertex_set());
    }
  }
  return {found.begin(), found.end()};
}

std::vector<StandardPair> maximal_products(const Graph& g) {
  std::set<StandardPair> pairs;
  for (const auto& s : enumerate_maximally_standard(g)) {
    pairs.insert(make_standard_pair(s, orthogonal_complement(g, s)));
  }
  return {pairs.begin(), pairs.end()};
}

// ---------------------------------------------------------------- separability

namespace {

using Visit = std::function<bool(const Subgraph&)>;

// Simple cycles through `through` (a vertex) avoiding `blocked`; stops early
// when `visit` returns true.  When `edge` >= 0 the cycle must use that edge.
bool cycles_through(const Graph& g, int through, int edge, const Bits& blocked, const Visit& visit) {
  Subgraph acc(g);
  Bits on_path(g.num_vertices());
  on_path.set(through);
  int target = through;
  int first = through;
  if (edge >= 0) {
    first = g.other_end(edge, through);
    if (blocked.test(first)) return false;
    acc.add_edge(edge);
    on_path.set(first);
  }
  std::function<bool(int, int)> walk = [&](int v, int depth) {
    for (int e : g.incident(v)) {
      if (e == edge && v == first) continue;
      int w = g.other_end(e, v);
      if (w == target && depth + (edge >= 0 ? 1 : 0) >= 2 && !acc.has_edge(e)) {
        Subgraph cyc = acc;
        cyc.add_edge(e);
        if (visit(cyc)) return true;
        continue;
      }
      if (on_path.test(w) || blocked.test(w)) continue;
      on_path.set(w);
      Subgraph saved = acc;
      acc.add_edge(e);
      if (walk(w, depth + 1)) return true;
      acc = saved;
      on_path.reset(w);
    }
    return false;
  };
  return walk(first, 0);
}

// An arm at s: a path from s to some u followed by a cycle through u that
// meets the path only at u.  With allow_zero the path may be empty (u = s).
// The first step leaves s along `first_edge` when it is >= 0.
bool arms_from(const Graph& g, int s, int first_edge, bool allow_zero, const Bits& blocked,
               const Visit& visit) {
  Bits path_vertices(g.num_vertices());
  path_vertices.set(s);
  Subgraph path(g);
  path.add_vertex(s);

  std::function<bool(int)> grow = [&](int u) {
    Bits avoid = blocked | path_vertices;
    avoid.reset(u);
    bool stop = cycles_through(g, u, -1, avoid, [&](const Subgraph& cyc) {
      return visit(path.united(cyc));
    });
    if (stop) return true;
    for (int e : g.incident(u)) {
      int w = g.other_end(e, u);
      if (path_vertices.test(w) || blocked.test(w)) continue;
      path_vertices.set(w);
      Subgraph saved = path;
      path.add_edge(e);
      if (grow(w)) return true;
      path = saved;
      path_vertices.reset(w);
    }
    return false;
  };

  if (allow_zero) {
    Bits avoid = blocked;
    avoid.reset(s);
    if (cycles_through(g, s, -1, avoid, visit)) return true;
  }
  for (int e : g.incident(s)) {
    if (first_edge >= 0 && e != first_edge) continue;
    int w = g.other_end(e, s);
    if (blocked.test(w)) continue;
    path_vertices.set(w);
    path.add_edge(e);
    if (grow(w)) return true;
    path = Subgraph(g);
    path.add_vertex(s);
    path_vertices.reset(w);
  }
  return false;
}

// Visits connected leafless subgraphs containing b, including every minimal
// one.  Stops as soon as `visit` returns true.
bool containers(const Graph& g, const Subgraph& b, const Visit& visit) {
  if (!b.trivial() && is_leafless(b)) return visit(b);
  Bits none(g.num_vertices());

  if (b.num_vertices() == 1) {
    const int x = b.vertex_ids()[0];
    if (cycles_through(g, x, -1, none, visit)) return true;
    // x inside the path of a dumbbell
    for (int e1 : g.incident(x)) {
      bool stop = arms_from(g, x, e1, false, none, [&](const Subgraph& arm1) {
        Bits blocked = arm1.vertex_set();
        blocked.reset(x);
        for (int e2 : g.incident(x)) {
          if (e2 <= e1 || arm1.has_edge(e2)) continue;
          bool done = arms_from(g, x, e2, false, blocked, [&](const Subgraph& arm2) {
            return visit(arm1.united(arm2));
          });
          if (done) return true;
        }
        return false;
      });
      if (stop) return true;
    }
    return false;
  }

  if (b.num_edges() == 1) {
    const int e = b.edge_ids()[0];
    const int x = g.edge(e).u, y = g.edge(e).v;
    if (cycles_through(g, x, e, none, visit)) return true;
    Bits block_y(g.num_vertices());
    block_y.set(y);
    return arms_from(g, x, -1, true, block_y, [&](const Subgraph& arm_x) {
      Bits blocked = arm_x.vertex_set();
      return arms_from(g, y, -1, true, blocked, [&](const Subgraph& arm_y) {
        Subgraph whole = arm_x.united(arm_y);
        whole.add_edge(e);
        return visit(whole);
      });
    });
  }

  // General connected subgraph: search supersets among the remaining edges.
  std::vector<int> rest;
  for (int e = 0; e < g.num_edges(); ++e) {
    if (!b.has_edge(e)) rest.push_back(e);
  }
  const std::size_t cap = enumeration_cap();
  if (rest.size() >= 63 || (std::size_t{1} << rest.size()) > cap) {
    throw CapExceeded("container search for a general subgraph exceeded cap");
  }
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << rest.size()); ++mask) {
    Subgraph cand = b;
    for (std::size_t i = 0; i < rest.size(); ++i) {
      if (mask >> i & 1) cand.add_edge(rest[i]);
    }
    if (is_leafless(cand) && is_connected(cand) && visit(cand)) return true;
  }
  return false;
}

void require_separable_input(const Subgraph& a, const Subgraph& b) {
  for (const Subgraph* s : {&a, &b}) {
    if (s->empty() || !is_connected(*s)) {
      throw InvalidInput("separability needs nonempty connected inputs");
    }
  }
  if (!a.vertex_disjoint(b)) throw InvalidInput("separability needs vertex-disjoint inputs");
}

}  // namespace

bool separable(const Graph& g, const Subgraph& a, const Subgraph& b) {
  require_separable_input(a, b);
  // Growing the container for b only shrinks the room left for a.
  if (!covered_by(a, core_avoiding(g, b.vertex_set()))) return false;
  if (!covered_by(b, core_avoiding(g, a.vertex_set()))) return false;
  const Subgraph& small = a.num_edges() <= b.num_edges() ? b : a;
  const Subgraph& other = &small == &b ? a : b;
  return containers(g, small, [&](const Subgraph& container) {
    return covered_by(other, core_avoiding(g, container.vertex_set()));
  });
}

Subgraph cell_subgraph(const Graph& g, const Cell& c) {
  if (c.is_vertex()) return Subgraph::of_vertex(g, c.u);
  return Subgraph::of_edge(g, g.edge_between(c.u, c.v));
}

bool separable(const Graph& g, const Cell& a, const Cell& b) {
  return separable(g, cell_subgraph(g, a), cell_subgraph(g, b));
}

// ---------------------------------------------------------------- UP2

std::vector<Config> up2_cells(const Graph& g) {
  std::set<Config> cells;
  for (const auto& p : maximal_products(g)) {
    for (auto& c : product_subcomplex_cells(g, p.first, p.second)) cells.insert(std::move(c));
  }
  return {cells.begin(), cells.end()};
}

std::vector<Config> up2_cells_by_separability(const Graph& g) {
  std::vector<Config> out;
  std::vector<Cell> cells = cells_of(Subgraph::whole(g));
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (std::size_t j = i + 1; j < cells.size(); ++j) {
      if (!cells_disjoint(cells[i], cells[j])) continue;
      if (separable(g, cells[i], cells[j])) out.push_back({cells[i], cells[j]});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

CubeComplex build_UP2(const Graph& g) {
  CubeComplex x = complex_from_configs(g, up2_cells(g));
  x.metadata["n"] = "2";
  x.metadata["subcomplex"] = "UP2";
  return x;
}

// ---------------------------------------------------------------- S, M, C graphs

int AbstractGraph::component_count() const {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); };
  for (const auto& [a, b] : edges) parent[find(a)] = find(b);
  int count = 0;
  for (int v = 0; v < n; ++v) count += find(v) == v ? 1 : 0;
  return count;
}

namespace {

std::vector<Subgraph> connected_leafless_subgraphs(const Graph& g) {
  const int m = g.num_edges();
  const std::size_t cap = enumeration_cap();
  if (m >= 63 || (std::size_t{1} << m) > cap) {
    throw CapExceeded("standard subgraph search over " + std::to_string(m) + " edges exceeds cap");
  }
  std::vector<Subgraph> out;
  std::vector<int> deg(g.num_vertices());
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    std::fill(deg.begin(), deg.end(), 0);
    for (int e = 0; e < m; ++e) {
      if (mask >> e & 1) {
        ++deg[g.edge(e).u];
        ++deg[g.edge(e).v];
      }
    }
    if (std::any_of(deg.begin(), deg.end(), [](int d) { return d == 1; })) continue;
    Subgraph s(g);
    for (int e = 0; e < m; ++e) {
      if (mask >> e & 1) s.add_edge(e);
    }
    if (is_connected(s)) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

AbstractGraph orthogonality_graph(const Graph& g, const std::vector<Subgraph>& nodes) {
  AbstractGraph ag;
  ag.n = static_cast<int>(nodes.size());
  std::vector<Subgraph> with_perp;
  for (const auto& s : nodes) with_perp.push_back(s.united(orthogonal_complement(g, s)));
  for (int i = 0; i < ag.n; ++i) {
    for (int j = i + 1; j < ag.n; ++j) {
      if (with_perp[j].contains(nodes[i]) || with_perp[i].contains(nodes[j])) ag.edges.emplace_back(i, j);
    }
  }
  return ag;
}

}  // namespace

StandardnessGraphs standardness_graphs(const Graph& g) {
  StandardnessGraphs out;
  for (auto& s : connected_leafless_subgraphs(g)) {
    if (!orthogonal_complement(g, s).trivial()) out.standard.push_back(std::move(s));
  }
  for (const auto& s : out.standard) {
    if (is_maximally_standard(g, s)) out.maximal.push_back(s);
  }
  for (auto& c : enumerate_cycles(g)) {
    if (!orthogonal_complement(g, c).trivial()) out.cycles.push_back(std::move(c));
  }
  out.s_graph = orthogonality_graph(g, out.standard);
  out.m_graph = orthogonality_graph(g, out.maximal);
  out.c_graph.n = static_cast<int>(out.cycles.size());
  for (int i = 0; i < out.c_graph.n; ++i) {
    for (int j = i + 1; j < out.c_graph.n; ++j) {
      if (out.cycles[i].vertex_disjoint(out.cycles[j])) out.c_graph.edges.emplace_back(i, j);
    }
  }
  return out;
}

// ---------------------------------------------------------------- SIP

bool standard_intersection_property(const Graph& g, int subset_cap) {
  auto products = maximal_products(g);
  bool ok = true;
  visit_product_intersections(g, products, subset_cap, [&](const std::vector<int>&, const auto& pieces) {
    for (const auto& piece : pieces) {
      if (!piece.standard) {
        ok = false;
        return true;
      }
    }
    return false;
  });
  return ok;
}

// ---------------------------------------------------------------- hierarchy

std::string to_string(Tri t) {
  switch (t) {
    case Tri::yes: return "yes";
    case Tri::no: return "no";
    case Tri::unknown: return "unknown";
  }
  return "unknown";
}

namespace {

bool condition_A(const Graph& g) {
  for (const auto& e : g.edges()) {
    for (int w : g.neighbors(e.u)) {
      if (w == e.v || g.edge_between(w, e.v) < 0) continue;
      if (g.degree(e.u) == 2 || g.degree(e.v) == 2 || g.degree(w) == 2) return false;
    }
  }
  return true;
}

}  // namespace

HierarchyReport hierarchy_report(const Graph& g) {
  HierarchyReport r;
  r.in_G0 = is_leafless(Subgraph::whole(g)) && has_two_disjoint_cycles(g);
  r.cond_A = condition_A(g);

  std::map<std::pair<int, int>, bool> memo;
  auto sep = [&](const Subgraph& a, const Subgraph& b) { return separable(g, a, b); };
  r.cond_B = true;
  r.cond_C = true;
  for (int e1 = 0; e1 < g.num_edges(); ++e1) {
    for (int e2 = e1 + 1; e2 < g.num_edges(); ++e2) {
      const Edge& a = g.edge(e1);
      const Edge& b = g.edge(e2);
      if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) continue;
      const Subgraph s1 = Subgraph::of_edge(g, e1), s2 = Subgraph::of_edge(g, e2);
      const bool edges_sep = sep(s1, s2);
      if (!edges_sep) r.cond_B = false;
      if (edges_sep || !r.cond_C) continue;
      for (int v1 : {a.u, a.v}) {
        for (int v2 : {b.u, b.v}) {
          if (sep(Subgraph::of_vertex(g, v1), s2) && sep(s1, Subgraph::of_vertex(g, v2))) r.cond_C = false;
        }
      }
    }
  }
  r.in_G3 = r.in_G0 && r.cond_C;
  r.in_G45 = r.in_G0 && r.cond_B;
  r.sip = r.in_G0 ? standard_intersection_property(g) : true;

  if (!r.in_G0) {
    r.in_G2 = Tri::no;
    r.in_G2_reason = "not in G0";
  } else if (r.in_G45) {
    r.in_G2 = Tri::yes;
    r.in_G2_reason = "condition B";
  } else if (auto grapes = recognize_grapes(g); grapes && grape_status(*grapes) == GrapeStatus::normal) {
    r.in_G2 = Tri::yes;
    r.in_G2_reason = "normal bunch of grapes";
  } else {
    r.in_G2 = Tri::unknown;
    r.in_G2_reason = "no decision rule applies";
  }

  if (!r.in_G0) {
    r.in_G1 = Tri::no;
    r.in_G1_reason = "not in G0";
  } else if (r.in_G2 == Tri::yes || r.in_G3) {
    r.in_G1 = Tri::yes;
    r.in_G1_reason = r.in_G3 ? "condition C" : r.in_G2_reason;
  } else {
    r.in_G1 = Tri::unknown;
    r.in_G1_reason = "no decision rule applies";
  }
  return r;
}

}  // namespace gbg
