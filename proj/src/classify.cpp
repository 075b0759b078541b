#include "gbg/classify.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "gbg/config_space.hpp"
#include "gbg/cube_complex.hpp"
#include "gbg/families.hpp"

namespace gbg {

int cyclomatic_number(const Graph& g) { return g.num_edges() - g.num_vertices() + component_count(g); }

BigInt binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt out = 1;
  for (long long i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

std::optional<ElementaryType> detect_elementary(const Graph& g) {
  if (g.num_vertices() == 0 || !is_connected(g) || essential_vertices(g).size() > 1) return std::nullopt;
  ElementaryType t;
  for (int v = 0; v < g.num_vertices(); ++v) t.k += g.degree(v) == 1 ? 1 : 0;
  t.l = cyclomatic_number(g);
  if (t.k + 2 * t.l < 2) return std::nullopt;
  if (!are_isomorphic(smooth_to_minimal_model(g), smooth_to_minimal_model(families::elementary(t.k, t.l)))) {
    return std::nullopt;
  }
  return t;
}

BigInt elementary_rank(const ElementaryType& t, int n) {
  if (n < 1) throw InvalidInput("number of points must be positive");
  if (t.k < 0 || t.l < 0 || t.k + 2 * t.l < 2) throw InvalidInput("elementary type needs k + 2l >= 2");
  const long long top = n + t.k + t.l - 2;
  return binomial(top, t.k + t.l - 1) * (t.k + 2 * t.l - 2) - binomial(top, t.k + t.l - 2) + 1;
}

namespace {

void require_points(int n) {
  if (n < 1) throw InvalidInput("number of points must be positive");
}

bool unicyclic_through_essentials(const Graph& g) {
  if (cyclomatic_number(g) != 1) return false;
  Subgraph cycle = leafless_core(Subgraph::whole(g));
  for (int v : essential_vertices(g)) {
    if (!cycle.has_vertex(v)) return false;
  }
  return true;
}

// A subdivided K_{2,3} with trees attached only at its two hubs.
bool k23_with_hub_trees(const Graph& g) {
  Subgraph core = leafless_core(Subgraph::whole(g));
  if (core.trivial()) return false;
  if (!are_isomorphic(smooth_to_minimal_model(to_graph(core)),
                      smooth_to_minimal_model(families::complete_bipartite(2, 3)))) {
    return false;
  }
  std::vector<int> hubs;
  for (int v : core.vertex_ids()) {
    if (core.degree(v) == 3) hubs.push_back(v);
  }
  return essential_vertices(g) == hubs;
}

}  // namespace

bool braid_free(const Graph& g, int n) {
  require_points(n);
  if (n == 1) return true;
  if (n == 2) return is_planar(g) && !has_two_disjoint_cycles(g);
  if (n == 3) {
    return is_tree(g) || detect_elementary(g).has_value() || unicyclic_through_essentials(g) ||
           k23_with_hub_trees(g);
  }
  return detect_elementary(g).has_value();
}

bool braid_hyperbolic(const Graph& g, int n) {
  require_points(n);
  if (n == 1) return true;
  if (n == 2) return !has_two_disjoint_cycles(g);
  if (n == 3) {
    for (int v : essential_vertices(g)) {
      Bits rest(g.num_vertices());
      rest.set();
      rest.reset(v);
      if (has_cycle(Subgraph::induced(g, rest))) return false;
    }
    return true;
  }
  return essential_vertices(g).size() <= 1;
}

std::optional<FreeRank> free_rank(const Graph& g, int n) {
  if (!braid_free(g, n)) return std::nullopt;
  FreeRank out;
  if (n == 1) {
    out.rank = cyclomatic_number(g);
    out.method = "cyclomatic";
    return out;
  }
  if (n == 2 && is_tree(g)) {
    for (int v = 0; v < g.num_vertices(); ++v) out.rank += binomial(g.degree(v) - 1, 2);
    out.method = "tree";
    return out;
  }
  if (auto t = detect_elementary(g)) {
    out.rank = elementary_rank(*t, n);
    out.method = "elementary";
    return out;
  }
  Graph sub = subdivide_for(g, n);
  HomologySummary h = homology_summary(build_UD(sub, n));
  out.rank = h.betti.size() > 1 ? h.betti[1] : 0;
  out.method = "homology";
  out.subdivision = std::move(sub);
  return out;
}

FreeAbelianWitness free_abelian_witness(const Graph& g, int n) {
  require_points(n);
  const auto cycles = enumerate_cycles(g);
  const auto essential = essential_vertices(g);
  FreeAbelianWitness best;
  std::vector<int> chosen;
  Bits used(g.num_vertices());

  auto score = [&]() {
    const int p = static_cast<int>(chosen.size());
    std::vector<int> vertices;
    for (int v : essential) {
      if (static_cast<int>(vertices.size()) * 2 + 2 > n - p) break;
      if (!used.test(v)) vertices.push_back(v);
    }
    const int q = static_cast<int>(vertices.size());
    if (p + q > best.p + best.q || (p + q == best.p + best.q && p > best.p)) {
      best.p = p;
      best.q = q;
      best.cycles.clear();
      for (int c : chosen) best.cycles.push_back(cycles[c]);
      best.vertices = vertices;
    }
  };
  std::function<void(std::size_t)> grow = [&](std::size_t from) {
    score();
    if (static_cast<int>(chosen.size()) >= n) return;
    for (std::size_t i = from; i < cycles.size(); ++i) {
      if ((cycles[i].vertex_set() & used).any()) continue;
      chosen.push_back(static_cast<int>(i));
      used |= cycles[i].vertex_set();
      grow(i + 1);
      used &= ~cycles[i].vertex_set();
      chosen.pop_back();
    }
  };
  grow(0);
  return best;
}

}  // namespace gbg
