#include "gbg/grapes.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace gbg {

int Grapes::total_loops() const {
  int total = 0;
  for (int m : loops) total += m;
  return total;
}

int Grapes::ambient_edge(int stem_edge) const {
  const Edge& e = stem.edge(stem_edge);
  return ambient->edge_between(stem_to_ambient[e.u], stem_to_ambient[e.v]);
}

namespace {

int stem_diameter(const Graph& stem) {
  int best = 0;
  for (int v = 0; v < stem.num_vertices(); ++v) {
    for (int d : bfs_distances(stem, v)) best = std::max(best, d);
  }
  return best;
}

// Reads the stem and its triangles off an ambient graph, given which ambient
// vertices belong to the stem.  Every other vertex must sit on a triangle at a
// stem vertex.
Grapes assemble(std::shared_ptr<const Graph> ambient, const Bits& on_stem) {
  const Graph& g = *ambient;
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::string> isolated;
  for (const auto& e : g.edges()) {
    if (on_stem.test(e.u) && on_stem.test(e.v)) edges.emplace_back(g.name(e.u), g.name(e.v));
  }
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (on_stem.test(v)) isolated.push_back(g.name(v));
  }
  Grapes G;
  G.stem = Graph(edges, isolated);
  G.ambient = std::move(ambient);
  const int n = G.stem.num_vertices();
  G.loops.assign(n, 0);
  G.grapes.assign(n, {});
  for (int s = 0; s < n; ++s) {
    const int v = g.index_of(G.stem.name(s));
    G.stem_to_ambient.push_back(v);
    for (int w : g.neighbors(v)) {
      if (on_stem.test(w)) continue;
      for (int x : g.neighbors(w)) {
        if (x == v || x < w || on_stem.test(x)) continue;
        ++G.loops[s];
        G.grapes[s].insert(G.grapes[s].end(), {g.edge_between(v, w), g.edge_between(v, x), g.edge_between(w, x)});
      }
    }
  }
  G.diameter = stem_diameter(G.stem);
  return G;
}

void require_normal(const Grapes& G) {
  if (grape_status(G) != GrapeStatus::normal) throw InvalidInput("bunch of grapes is not normal");
}

// Stem vertices reachable from `start` without crossing `blocked` stem edges.
Bits stem_side(const Grapes& G, const Bits& blocked, int start) {
  Bits seen(G.stem.num_vertices());
  std::vector<int> stack{start};
  seen.set(start);
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int e : G.stem.incident(v)) {
      int w = G.stem.other_end(e, v);
      if (blocked.test(e) || seen.test(w)) continue;
      seen.set(w);
      stack.push_back(w);
    }
  }
  return seen;
}

Subgraph side_core(const Grapes& G, const Bits& stem_vertices) {
  const Graph& g = *G.ambient;
  Bits keep(g.num_vertices());
  for (int s = 0; s < G.stem.num_vertices(); ++s) {
    if (!stem_vertices.test(s)) continue;
    keep.set(G.stem_to_ambient[s]);
    for (int e : G.grapes[s]) {
      keep.set(g.edge(e).u);
      keep.set(g.edge(e).v);
    }
  }
  return leafless_core(Subgraph::induced(g, keep));
}

std::vector<std::vector<int>> all_distances(const Graph& t) {
  std::vector<std::vector<int>> d;
  for (int v = 0; v < t.num_vertices(); ++v) d.push_back(bfs_distances(t, v));
  return d;
}

Bits path_edges(const Graph& t, int from, int to) {
  Bits out(t.num_edges());
  auto path = shortest_path(t, from, to);
  for (std::size_t i = 0; i + 1 < path.size(); ++i) out.set(t.edge_between(path[i], path[i + 1]));
  return out;
}

// Twig products sorted like maximal_products, with the stem edge of each.
std::vector<TwigProduct> sorted_twigs(const Grapes& G) {
  auto twigs = twig_maximal_products(G);
  std::sort(twigs.begin(), twigs.end(), [](const TwigProduct& a, const TwigProduct& b) { return a.pair < b.pair; });
  return twigs;
}

struct GrapeComplex {
  IntersectionComplex ic;
  std::vector<std::vector<int>> lengths;  // parallel to ic.simplices
};

GrapeComplex build_grape_complex(const Grapes& G) {
  const auto twigs = sorted_twigs(G);
  const auto dist = all_distances(G.stem);
  GrapeComplex out;
  for (const auto& t : twigs) out.ic.vertices.push_back(t.pair);

  auto on_path = [&](int p, int q, int w) { return dist[p][w] + dist[w][q] == dist[p][q]; };
  std::vector<int> chosen;
  std::function<void(int, int, int)> grow = [&](int from, int x, int y) {
    const std::size_t d = chosen.size() - 1;
    if (out.ic.simplices.size() <= d) {
      out.ic.simplices.resize(d + 1);
      out.lengths.resize(d + 1);
    }
    Bits blocked = path_edges(G.stem, x, y);
    StandardPair label = make_standard_pair(side_core(G, stem_side(G, blocked, x)),
                                            side_core(G, stem_side(G, blocked, y)));
    out.ic.simplices[d].push_back({chosen, label});
    out.lengths[d].push_back(dist[x][y]);

    for (int j = from; j < static_cast<int>(twigs.size()); ++j) {
      const Edge& e = G.stem.edge(twigs[j].stem_edge);
      const int pts[4] = {x, y, e.u, e.v};
      int best_p = -1, best_q = -1;
      for (int p : pts) {
        for (int q : pts) {
          if (!std::all_of(std::begin(pts), std::end(pts), [&](int w) { return on_path(p, q, w); })) continue;
          if (best_p < 0 || dist[p][q] > dist[best_p][best_q]) best_p = p, best_q = q;
        }
      }
      if (best_p < 0) continue;
      chosen.push_back(j);
      grow(j + 1, best_p, best_q);
      chosen.pop_back();
    }
  };
  for (int i = 0; i < static_cast<int>(twigs.size()); ++i) {
    const Edge& e = G.stem.edge(twigs[i].stem_edge);
    chosen = {i};
    grow(i + 1, e.u, e.v);
  }
  for (std::size_t d = 0; d < out.ic.simplices.size(); ++d) {
    std::vector<std::size_t> order(out.ic.simplices[d].size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    auto& level = out.ic.simplices[d];
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return level[a].vertices < level[b].vertices; });
    std::vector<Simplex> sorted_level;
    std::vector<int> sorted_lengths;
    for (std::size_t i : order) {
      sorted_level.push_back(level[i]);
      sorted_lengths.push_back(out.lengths[d][i]);
    }
    level = std::move(sorted_level);
    out.lengths[d] = std::move(sorted_lengths);
  }
  return out;
}

long long choose2(long long n) { return n < 2 ? 0 : n * (n - 1) / 2; }

}  // namespace

Grapes materialize_grapes(const Graph& stem, const std::vector<int>& loops) {
  if (!is_tree(stem)) throw InvalidInput("stem is not a tree");
  if (static_cast<int>(loops.size()) != stem.num_vertices()) throw InvalidInput("loop counts do not match the stem");
  std::vector<std::pair<std::string, std::string>> edges = stem.edge_names();
  std::vector<std::string> isolated;
  for (int v = 0; v < stem.num_vertices(); ++v) {
    if (loops[v] < 0) throw InvalidInput("negative loop count at " + stem.name(v));
    isolated.push_back(stem.name(v));
    for (int i = 1; i <= loops[v]; ++i) {
      const std::string base = stem.name(v) + "#g" + std::to_string(i);
      edges.emplace_back(stem.name(v), base + "a");
      edges.emplace_back(stem.name(v), base + "b");
      edges.emplace_back(base + "a", base + "b");
    }
  }
  auto ambient = std::make_shared<const Graph>(edges, isolated);
  Bits on_stem(ambient->num_vertices());
  for (int v = 0; v < stem.num_vertices(); ++v) on_stem.set(ambient->index_of(stem.name(v)));
  return assemble(std::move(ambient), on_stem);
}

std::optional<Grapes> recognize_grapes(const Graph& g) {
  if (g.num_vertices() == 0 || !is_connected(g)) return std::nullopt;
  Bits on_stem(g.num_vertices());
  std::vector<std::vector<int>> triangles;
  for (const auto& b : blocks(g)) {
    if (b.num_edges() == 1) {
      for (int v : b.vertex_ids()) on_stem.set(v);
    } else if (b.num_edges() == 3 && b.num_vertices() == 3) {
      triangles.push_back(b.vertex_ids());
    } else if (b.num_edges() != 0) {
      return std::nullopt;
    }
  }
  if (g.num_vertices() == 1) on_stem.set(0);
  for (const auto& t : triangles) {
    int cut = 0;
    for (int v : t) {
      if (g.degree(v) > 2) {
        on_stem.set(v);
        ++cut;
      }
    }
    if (cut > 1) return std::nullopt;
    if (cut == 0) on_stem.set(t[0]);
  }
  return assemble(std::make_shared<const Graph>(g), on_stem);
}

std::string to_string(GrapeStatus s) {
  switch (s) {
    case GrapeStatus::small: return "small";
    case GrapeStatus::large: return "large";
    case GrapeStatus::normal: return "normal";
  }
  return "small";
}

GrapeStatus grape_status(const Grapes& G) {
  const int looped = static_cast<int>(std::count_if(G.loops.begin(), G.loops.end(), [](int m) { return m > 0; }));
  if (looped < 2) return GrapeStatus::small;
  for (int v = 0; v < G.stem.num_vertices(); ++v) {
    if (G.stem.degree(v) == 1 && G.loops[v] == 0) return GrapeStatus::large;
  }
  return GrapeStatus::normal;
}

Grapes normalize(const Grapes& G) {
  const Graph& t = G.stem;
  Bits alive(t.num_vertices());
  alive.set();
  std::vector<int> deg(t.num_vertices());
  for (int v = 0; v < t.num_vertices(); ++v) deg[v] = t.degree(v);
  std::size_t remaining = alive.count();
  for (bool changed = true; changed && remaining > 1;) {
    changed = false;
    for (int v = 0; v < t.num_vertices() && remaining > 1; ++v) {
      if (!alive.test(v) || deg[v] != 1 || G.loops[v] > 0) continue;
      alive.reset(v);
      --remaining;
      for (int w : t.neighbors(v)) {
        if (alive.test(w)) --deg[w];
      }
      changed = true;
    }
  }
  const Graph& g = *G.ambient;
  Bits keep(g.num_vertices()), on_stem(g.num_vertices());
  for (int s = 0; s < t.num_vertices(); ++s) {
    if (!alive.test(s)) continue;
    keep.set(G.stem_to_ambient[s]);
    for (int e : G.grapes[s]) {
      keep.set(g.edge(e).u);
      keep.set(g.edge(e).v);
    }
  }
  auto reduced = std::make_shared<const Graph>(to_graph(Subgraph::induced(g, keep)));
  Bits reduced_stem(reduced->num_vertices());
  for (int s = 0; s < t.num_vertices(); ++s) {
    if (alive.test(s)) reduced_stem.set(reduced->index_of(t.name(s)));
  }
  return assemble(std::move(reduced), reduced_stem);
}

Subgraph twig_component(const Grapes& G, int stem_edge, int side) {
  Bits blocked(G.stem.num_edges());
  blocked.set(stem_edge);
  const Edge& e = G.stem.edge(stem_edge);
  return side_core(G, stem_side(G, blocked, side == 0 ? e.u : e.v));
}

std::vector<TwigProduct> twig_maximal_products(const Grapes& G) {
  require_normal(G);
  std::vector<TwigProduct> out;
  for (int e = 0; e < G.stem.num_edges(); ++e) {
    out.push_back({e, make_standard_pair(twig_component(G, e, 0), twig_component(G, e, 1))});
  }
  return out;
}

IntersectionComplex grape_icomplex(const Grapes& G) { return build_grape_complex(G).ic; }

IntersectionComplex icomplex_filtration(const Grapes& G, int k) {
  if (k < 2 || k > G.diameter) {
    throw InvalidInput("filtration level " + std::to_string(k) + " outside [2, " + std::to_string(G.diameter) + "]");
  }
  GrapeComplex full = build_grape_complex(G);
  IntersectionComplex out;
  out.vertices = full.ic.vertices;
  for (std::size_t d = 0; d < full.ic.simplices.size(); ++d) {
    std::vector<Simplex> kept;
    for (std::size_t i = 0; i < full.ic.simplices[d].size(); ++i) {
      if (full.lengths[d][i] <= k) kept.push_back(full.ic.simplices[d][i]);
    }
    if (kept.empty()) break;
    out.simplices.push_back(std::move(kept));
  }
  return out;
}

AbstractGraph glued_clique_graph(const Grapes& G) {
  const auto twigs = sorted_twigs(G);
  AbstractGraph out;
  out.n = static_cast<int>(twigs.size());
  for (int i = 0; i < out.n; ++i) {
    for (int j = i + 1; j < out.n; ++j) {
      const Edge& a = G.stem.edge(twigs[i].stem_edge);
      const Edge& b = G.stem.edge(twigs[j].stem_edge);
      if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) out.edges.emplace_back(i, j);
    }
  }
  return out;
}

std::map<std::string, int> filtration_cliques(const Grapes& G) {
  std::map<std::string, int> out;
  for (int v = 0; v < G.stem.num_vertices(); ++v) {
    if (G.stem.degree(v) >= 2) out[G.stem.name(v)] = G.stem.degree(v);
  }
  return out;
}

FreeFactorRank free_factor_rank(const Grapes& G) {
  require_normal(G);
  FreeFactorRank out;
  for (int v = 0; v < G.stem.num_vertices(); ++v) {
    const long long val = G.stem.degree(v), m = G.loops[v];
    VertexRanks r;
    r.total = (val + m) * (val + 3 * m - 3) / 2 + 1;
    r.partial = choose2(val - 1) + val * m;
    r.free = 3 * m * (m - 1) / 2 + val * m;
    out.rank += r.free;
    out.per_vertex[G.stem.name(v)] = r;
  }
  if (out.rank < G.total_loops()) throw std::logic_error("free factor rank below the number of grapes");
  return out;
}

std::optional<RaagGraph> path_stem_raag(const Grapes& G) {
  const Grapes N = normalize(G);
  const Graph& t = N.stem;
  RaagGraph out;
  if (grape_status(N) == GrapeStatus::small) {
    // At most one looped vertex: a bouquet of m triangles, whose 2-braid group is free.
    const long long m = N.total_loops();
    out.stem_path = {t.name(0)};
    out.isolated_rank = m == 0 ? 0 : m * (3 * m - 3) / 2 + 1;
    return out;
  }
  for (int v = 0; v < t.num_vertices(); ++v) {
    if (t.degree(v) > 2) return std::nullopt;
  }
  int start = -1;
  for (int v = 0; v < t.num_vertices(); ++v) {
    if (t.degree(v) == 1 && (start < 0 || t.name(v) < t.name(start))) start = v;
  }
  std::vector<int> order{start};
  for (int prev = -1, cur = start;;) {
    int next = -1;
    for (int w : t.neighbors(cur)) {
      if (w != prev) next = w;
    }
    if (next < 0) break;
    order.push_back(next);
    prev = cur;
    cur = next;
  }
  const int n = static_cast<int>(order.size()) - 1;
  for (int v : order) out.stem_path.push_back(t.name(v));
  std::vector<int> a_pos, b_pos;
  for (int p = 0; p < n; ++p) {
    for (int q = 1; q <= N.loops[order[p]]; ++q) {
      out.vertices.push_back("a" + std::to_string(p) + "," + std::to_string(q));
      a_pos.push_back(p);
    }
  }
  const int a_count = static_cast<int>(out.vertices.size());
  for (int p = 1; p <= n; ++p) {
    for (int q = 1; q <= N.loops[order[p]]; ++q) {
      out.vertices.push_back("b" + std::to_string(p) + "," + std::to_string(q));
      b_pos.push_back(p);
    }
  }
  for (int i = 0; i < a_count; ++i) {
    for (int j = 0; j < static_cast<int>(b_pos.size()); ++j) {
      if (a_pos[i] < b_pos[j]) out.edges.emplace_back(i, a_count + j);
    }
  }
  out.isolated_rank = free_factor_rank(N).rank;
  return out;
}

std::optional<DynkinWitness> dynkin_witness(const Grapes& G) {
  const Graph& t = G.stem;
  const auto dist = all_distances(t);
  std::optional<DynkinWitness> best;
  for (int u = 0; u < t.num_vertices(); ++u) {
    for (int v = u + 1; v < t.num_vertices(); ++v) {
      auto path = shortest_path(t, u, v);
      std::set<int> on_path(path.begin(), path.end());
      auto enough_leaves = [&](int x) {
        int leaves = 0;
        for (int w : t.neighbors(x)) {
          if (t.degree(w) == 1 && !on_path.count(w)) ++leaves;
        }
        return leaves >= 2;
      };
      if (!enough_leaves(u) || !enough_leaves(v)) continue;
      const int n = dist[u][v] + 4;
      if (!best || n < best->n) best = DynkinWitness{t.name(u), t.name(v), n};
    }
  }
  return best;
}

bool tripod_before(const Tripod& x, const Tripod& y) {
  const int sx = x.a + x.b + x.c, sy = y.a + y.b + y.c;
  if (sx != sy) return sx < sy;
  if (x.a + x.b != y.a + y.b) return x.a + x.b < y.a + y.b;
  return x.a < y.a;
}

std::vector<Tripod> tripod_set(const Grapes& G) {
  const Graph& t = G.stem;
  std::vector<Tripod> found;
  auto known = [&](int a, int b, int c) {
    return std::any_of(found.begin(), found.end(), [&](const Tripod& x) { return x.a == a && x.b == b && x.c == c; });
  };
  for (int x = 0; x < t.num_vertices(); ++x) {
    if (t.degree(x) < 3) continue;
    const auto dist = bfs_distances(t, x);
    std::vector<std::set<int>> branch;
    for (int e : t.incident(x)) {
      Bits blocked(t.num_edges());
      blocked.set(e);
      Bits side = stem_side(G, blocked, t.other_end(e, x));
      std::set<int> leaves;
      for (int w = 0; w < t.num_vertices(); ++w) {
        if (side.test(w) && t.degree(w) == 1) leaves.insert(dist[w]);
      }
      branch.push_back(std::move(leaves));
    }
    const int k = static_cast<int>(branch.size());
    for (int i = 0; i < k; ++i) {
      for (int j = i + 1; j < k; ++j) {
        for (int l = j + 1; l < k; ++l) {
          for (int p : branch[i]) {
            for (int q : branch[j]) {
              for (int r : branch[l]) {
                int v[3] = {p, q, r};
                std::sort(v, v + 3);
                if (v[0] == v[1] || v[1] == v[2] || known(v[0], v[1], v[2])) continue;
                found.push_back({v[0], v[1], v[2], t.name(x)});
              }
            }
          }
        }
      }
    }
  }
  std::stable_sort(found.begin(), found.end(), tripod_before);
  return found;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::unknown: return "unknown";
  }
  return "unknown";
}

QiRaagReport qi_raag_verdict(const Grapes& G) {
  QiRaagReport r;
  r.raag = path_stem_raag(G);
  if (r.raag) {
    r.verdict = Verdict::yes;
    r.rule = "looped stem vertices lie on a path";
    return r;
  }
  const Grapes N = normalize(G);
  r.dynkin = dynkin_witness(N);
  if (r.dynkin) {
    r.verdict = Verdict::no;
    r.rule = "Dynkin subtree";
    return r;
  }
  auto tripods = tripod_set(N);
  if (!tripods.empty()) {
    r.verdict = Verdict::no;
    r.tripod = tripods.front();
    r.rule = "tripod subtree";
    return r;
  }
  r.rule = "no decision rule applies";
  return r;
}

std::string to_string(LeafSequenceResult r) {
  return r == LeafSequenceResult::nontrivial ? "nontrivial" : "inconclusive";
}

LeafSequenceResult leaf_sequence_analysis(const Grapes& G, const std::vector<std::string>& leaves) {
  require_normal(G);
  const Graph& t = G.stem;
  if (leaves.size() < 4) throw InvalidInput("leaf sequence needs at least four entries");
  if (leaves.front() != leaves.back()) throw InvalidInput("leaf sequence must be closed");
  std::vector<int> ids;
  for (const auto& name : leaves) {
    int v = t.index_of(name);
    if (v < 0 || t.degree(v) != 1) throw InvalidInput("'" + name + "' is not a stem leaf");
    if (!ids.empty() && ids.back() == v) throw InvalidInput("leaf sequence repeats '" + name + "'");
    ids.push_back(v);
  }
  const int n = static_cast<int>(ids.size()) - 1;
  std::vector<Bits> paths;
  for (int i = 0; i < n; ++i) paths.push_back(path_edges(t, ids[i], ids[i + 1]));
  for (int i = 0; i + 2 < n; ++i) {
    if ((paths[i] & paths[i + 1] & paths[i + 2]).any()) return LeafSequenceResult::inconclusive;
  }
  return LeafSequenceResult::nontrivial;
}

}  // namespace gbg
