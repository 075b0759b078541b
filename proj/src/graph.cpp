#include "gbg/graph.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

namespace gbg {

Graph::Graph(const std::vector<std::pair<std::string, std::string>>& edges,
             const std::vector<std::string>& isolated) {
  std::set<std::string> all(isolated.begin(), isolated.end());
  for (const auto& [a, b] : edges) {
    if (a == b) throw InvalidInput("loop at vertex '" + a + "'");
    all.insert(a);
    all.insert(b);
  }
  names_.assign(all.begin(), all.end());
  std::map<std::string, int> index;
  for (int i = 0; i < num_vertices(); ++i) index[names_[i]] = i;

  for (const auto& [a, b] : edges) {
    int u = index[a], v = index[b];
    if (u > v) std::swap(u, v);
    edges_.push_back({u, v});
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& x, const Edge& y) { return std::pair(x.u, x.v) < std::pair(y.u, y.v); });
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i] == edges_[i - 1]) {
      throw InvalidInput("repeated edge '" + names_[edges_[i].u] + "'-'" + names_[edges_[i].v] + "'");
    }
  }
  adj_.assign(names_.size(), {});
  inc_.assign(names_.size(), {});
  for (int e = 0; e < num_edges(); ++e) {
    adj_[edges_[e].u].push_back(edges_[e].v);
    adj_[edges_[e].v].push_back(edges_[e].u);
    inc_[edges_[e].u].push_back(e);
    inc_[edges_[e].v].push_back(e);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

int Graph::index_of(const std::string& name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) return -1;
  return static_cast<int>(it - names_.begin());
}

int Graph::edge_between(int u, int v) const {
  for (int e : inc_[u]) {
    if (other_end(e, u) == v) return e;
  }
  return -1;
}

std::vector<std::pair<std::string, std::string>> Graph::edge_names() const {
  std::vector<std::pair<std::string, std::string>> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) out.emplace_back(names_[e.u], names_[e.v]);
  return out;
}

// ---------------------------------------------------------------- Subgraph

Subgraph::Subgraph(const Graph& parent)
    : parent_(&parent), edges_(parent.num_edges()), vertices_(parent.num_vertices()) {}

Subgraph Subgraph::whole(const Graph& g) {
  Subgraph s(g);
  s.edges_.set();
  s.vertices_.set();
  return s;
}

Subgraph Subgraph::of_vertex(const Graph& g, int v) {
  Subgraph s(g);
  s.vertices_.set(v);
  return s;
}

Subgraph Subgraph::of_edge(const Graph& g, int e) {
  Subgraph s(g);
  s.add_edge(e);
  return s;
}

Subgraph Subgraph::of_edges(const Graph& g, const std::vector<int>& edge_ids) {
  Subgraph s(g);
  for (int e : edge_ids) s.add_edge(e);
  return s;
}

Subgraph Subgraph::of_edge_bits(const Graph& g, const Bits& edges) {
  Subgraph s(g);
  for (auto e = edges.find_first(); e != Bits::npos; e = edges.find_next(e)) {
    s.add_edge(static_cast<int>(e));
  }
  return s;
}

Subgraph Subgraph::induced(const Graph& g, const Bits& vertices) {
  Subgraph s(g);
  s.vertices_ = vertices;
  for (int e = 0; e < g.num_edges(); ++e) {
    if (vertices.test(g.edge(e).u) && vertices.test(g.edge(e).v)) s.edges_.set(e);
  }
  return s;
}

int Subgraph::degree(int v) const {
  int d = 0;
  for (int e : parent_->incident(v)) d += edges_.test(e) ? 1 : 0;
  return d;
}

std::vector<int> Subgraph::edge_ids() const {
  std::vector<int> out;
  for (auto e = edges_.find_first(); e != Bits::npos; e = edges_.find_next(e)) {
    out.push_back(static_cast<int>(e));
  }
  return out;
}

std::vector<int> Subgraph::vertex_ids() const {
  std::vector<int> out;
  for (auto v = vertices_.find_first(); v != Bits::npos; v = vertices_.find_next(v)) {
    out.push_back(static_cast<int>(v));
  }
  return out;
}

void Subgraph::add_edge(int e) {
  edges_.set(e);
  vertices_.set(parent_->edge(e).u);
  vertices_.set(parent_->edge(e).v);
}

bool Subgraph::contains(const Subgraph& other) const {
  return other.edges_.is_subset_of(edges_) && other.vertices_.is_subset_of(vertices_);
}

bool Subgraph::vertex_disjoint(const Subgraph& other) const {
  return !vertices_.intersects(other.vertices_);
}

Subgraph Subgraph::united(const Subgraph& other) const {
  Subgraph s(*this);
  s.edges_ |= other.edges_;
  s.vertices_ |= other.vertices_;
  return s;
}

Subgraph Subgraph::intersected(const Subgraph& other) const {
  Subgraph s(*this);
  s.edges_ &= other.edges_;
  s.vertices_ &= other.vertices_;
  return s;
}

std::string Subgraph::to_string() const {
  std::string out = "{";
  bool first = true;
  Bits covered(parent_->num_vertices());
  for (int e : edge_ids()) {
    const Edge& ed = parent_->edge(e);
    covered.set(ed.u);
    covered.set(ed.v);
    out += (first ? "" : ", ") + parent_->name(ed.u) + "-" + parent_->name(ed.v);
    first = false;
  }
  for (int v : vertex_ids()) {
    if (covered.test(v)) continue;
    out += (first ? "" : ", ") + parent_->name(v);
    first = false;
  }
  return out + "}";
}

bool Subgraph::operator<(const Subgraph& other) const {
  auto a = edge_ids(), b = other.edge_ids();
  if (a != b) return a < b;
  return vertex_ids() < other.vertex_ids();
}

Graph to_graph(const Subgraph& s) {
  const Graph& g = s.parent();
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::string> isolated;
  for (int e : s.edge_ids()) edges.emplace_back(g.name(g.edge(e).u), g.name(g.edge(e).v));
  for (int v : s.vertex_ids()) isolated.push_back(g.name(v));
  return Graph(edges, isolated);
}

// ---------------------------------------------------------------- basics

std::vector<Subgraph> connected_components(const Subgraph& s) {
  const Graph& g = s.parent();
  std::vector<Subgraph> out;
  Bits seen(g.num_vertices());
  for (int start : s.vertex_ids()) {
    if (seen.test(start)) continue;
    Subgraph comp(g);
    std::vector<int> stack{start};
    seen.set(start);
    comp.add_vertex(start);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int e : g.incident(v)) {
        if (!s.has_edge(e)) continue;
        comp.add_edge(e);
        int w = g.other_end(e, v);
        if (!seen.test(w)) {
          seen.set(w);
          stack.push_back(w);
        }
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Subgraph& s) { return connected_components(s).size() <= 1; }

bool is_connected(const Graph& g) { return is_connected(Subgraph::whole(g)); }

int component_count(const Graph& g) {
  return static_cast<int>(connected_components(Subgraph::whole(g)).size());
}

bool is_leafless(const Subgraph& s) {
  for (int v : s.vertex_ids()) {
    if (s.degree(v) < 2) return false;
  }
  return true;
}

bool has_cycle(const Subgraph& s) {
  auto comps = connected_components(s);
  return s.num_edges() + comps.size() > s.num_vertices();
}

bool is_tree(const Graph& g) {
  return g.num_vertices() > 0 && is_connected(g) && g.num_edges() == g.num_vertices() - 1;
}

std::vector<int> essential_vertices(const Graph& g) {
  std::vector<int> out;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) >= 3) out.push_back(v);
  }
  return out;
}

std::vector<int> bfs_distances(const Graph& g, int source) {
  std::vector<int> dist(g.num_vertices(), -1);
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<int> shortest_path(const Graph& g, int from, int to) {
  std::vector<int> parent(g.num_vertices(), -1);
  std::deque<int> queue{from};
  parent[from] = from;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    if (v == to) break;
    for (int w : g.neighbors(v)) {
      if (parent[w] < 0) {
        parent[w] = v;
        queue.push_back(w);
      }
    }
  }
  if (parent[to] < 0) return {};
  std::vector<int> path{to};
  while (path.back() != from) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

Subgraph leafless_core(const Subgraph& s) {
  const Graph& g = s.parent();
  Subgraph core = s;
  std::vector<int> deg(g.num_vertices(), 0);
  std::vector<int> queue;
  for (int v : s.vertex_ids()) {
    deg[v] = s.degree(v);
    if (deg[v] < 2) queue.push_back(v);
  }
  Bits removed(g.num_vertices());
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    if (removed.test(v)) continue;
    removed.set(v);
    for (int e : g.incident(v)) {
      if (!s.has_edge(e)) continue;
      int w = g.other_end(e, v);
      if (removed.test(w)) continue;
      if (--deg[w] < 2) queue.push_back(w);
    }
  }
  Subgraph out(g);
  for (int e : s.edge_ids()) {
    if (!removed.test(g.edge(e).u) && !removed.test(g.edge(e).v)) out.add_edge(e);
  }
  return out;
}

// ---------------------------------------------------------------- subdivision

namespace {

struct Branch {
  int start;
  int end;
  std::vector<int> edges;
};

// Maximal paths whose interior vertices are bivalent, each listed once.
std::vector<Branch> branches(const Graph& g) {
  std::vector<Branch> out;
  Bits used(g.num_edges());
  for (int s = 0; s < g.num_vertices(); ++s) {
    if (g.degree(s) == 2) continue;
    for (int e0 : g.incident(s)) {
      if (used.test(e0)) continue;
      Branch b{s, -1, {}};
      int v = s, e = e0;
      while (true) {
        used.set(e);
        b.edges.push_back(e);
        v = g.other_end(e, v);
        if (g.degree(v) != 2) break;
        int next = g.incident(v)[0] == e ? g.incident(v)[1] : g.incident(v)[0];
        e = next;
      }
      b.end = v;
      out.push_back(std::move(b));
    }
  }
  return out;
}

// Shortest cycle as an edge list (empty if acyclic); ties broken by edge id.
std::vector<int> shortest_cycle(const Graph& g) {
  std::vector<int> best;
  for (int e = 0; e < g.num_edges(); ++e) {
    int u = g.edge(e).u, v = g.edge(e).v;
    std::vector<int> parent_edge(g.num_vertices(), -2);
    std::deque<int> queue{u};
    parent_edge[u] = -1;
    while (!queue.empty() && parent_edge[v] == -2) {
      int x = queue.front();
      queue.pop_front();
      for (int f : g.incident(x)) {
        if (f == e) continue;
        int y = g.other_end(f, x);
        if (parent_edge[y] == -2) {
          parent_edge[y] = f;
          queue.push_back(y);
        }
      }
    }
    if (parent_edge[v] == -2) continue;
    std::vector<int> cyc{e};
    for (int x = v; x != u;) {
      int f = parent_edge[x];
      cyc.push_back(f);
      x = g.other_end(f, x);
    }
    if (best.empty() || cyc.size() < best.size()) best = cyc;
  }
  return best;
}

Graph subdivide_edge(const Graph& g, int e, int count) {
  auto edges = g.edge_names();
  const auto [a, b] = edges[e];
  edges.erase(edges.begin() + e);
  std::vector<std::string> fresh;
  for (int i = 1; static_cast<int>(fresh.size()) < count; ++i) {
    std::string name = a + "~" + b + "~" + std::to_string(i);
    if (g.index_of(name) < 0) fresh.push_back(name);
  }
  std::string prev = a;
  for (const auto& x : fresh) {
    edges.emplace_back(prev, x);
    prev = x;
  }
  edges.emplace_back(prev, b);
  std::vector<std::string> isolated;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) == 0) isolated.push_back(g.name(v));
  }
  return Graph(edges, isolated);
}

}  // namespace

bool is_sufficiently_subdivided(const Graph& g, int n) {
  for (const auto& b : branches(g)) {
    if (b.start != b.end && static_cast<int>(b.edges.size()) < n - 1) return false;
  }
  auto cyc = shortest_cycle(g);
  return cyc.empty() || static_cast<int>(cyc.size()) >= n + 1;
}

Graph subdivide_for(const Graph& g, int n) {
  Graph cur = g;
  while (true) {
    bool changed = false;
    for (const auto& b : branches(cur)) {
      int len = static_cast<int>(b.edges.size());
      if (b.start != b.end && len < n - 1) {
        cur = subdivide_edge(cur, *std::min_element(b.edges.begin(), b.edges.end()), n - 1 - len);
        changed = true;
        break;
      }
    }
    if (changed) continue;
    auto cyc = shortest_cycle(cur);
    if (!cyc.empty() && static_cast<int>(cyc.size()) < n + 1) {
      cur = subdivide_edge(cur, *std::min_element(cyc.begin(), cyc.end()),
                           n + 1 - static_cast<int>(cyc.size()));
      continue;
    }
    return cur;
  }
}

Graph smooth_to_minimal_model(const Graph& g) {
  Graph cur = g;
  while (true) {
    int pick = -1;
    for (int x = 0; x < cur.num_vertices() && pick < 0; ++x) {
      if (cur.degree(x) != 2) continue;
      int a = cur.neighbors(x)[0], b = cur.neighbors(x)[1];
      if (cur.edge_between(a, b) < 0) pick = x;
    }
    if (pick < 0) return cur;
    std::vector<std::pair<std::string, std::string>> edges;
    std::vector<std::string> isolated;
    for (const auto& e : cur.edges()) {
      if (e.u != pick && e.v != pick) edges.emplace_back(cur.name(e.u), cur.name(e.v));
    }
    edges.emplace_back(cur.name(cur.neighbors(pick)[0]), cur.name(cur.neighbors(pick)[1]));
    for (int v = 0; v < cur.num_vertices(); ++v) {
      if (cur.degree(v) == 0) isolated.push_back(cur.name(v));
    }
    cur = Graph(edges, isolated);
  }
}

// ---------------------------------------------------------------- cycles

std::vector<Subgraph> enumerate_cycles(const Graph& g, std::size_t cap) {
  std::vector<Subgraph> out;
  const int n = g.num_vertices();
  std::vector<int> path;
  std::vector<int> path_edges;
  Bits on_path(n);

  std::function<void(int, int)> extend = [&](int s, int v) {
    for (int e : g.incident(v)) {
      int w = g.other_end(e, v);
      if (w == s && path.size() >= 3 && path[1] < path.back()) {
        Subgraph c(g);
        for (int f : path_edges) c.add_edge(f);
        c.add_edge(e);
        out.push_back(std::move(c));
        if (out.size() > cap) {
          throw CapExceeded("cycle enumeration exceeded cap of " + std::to_string(cap));
        }
        continue;
      }
      if (w <= s || on_path.test(w)) continue;
      on_path.set(w);
      path.push_back(w);
      path_edges.push_back(e);
      extend(s, w);
      path.pop_back();
      path_edges.pop_back();
      on_path.reset(w);
    }
  };

  for (int s = 0; s < n; ++s) {
    path = {s};
    path_edges.clear();
    on_path.reset();
    on_path.set(s);
    extend(s, s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool has_two_disjoint_cycles(const Graph& g) {
  Subgraph core = leafless_core(Subgraph::whole(g));
  if (core.trivial()) return false;
  const Graph cg = to_graph(core);
  for (const auto& c : enumerate_cycles(cg)) {
    Bits rest = ~c.vertex_set();
    if (has_cycle(Subgraph::induced(cg, rest))) return true;
  }
  return false;
}

// ---------------------------------------------------------------- planarity

bool is_planar(const Graph& g) {
  using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BoostGraph bg(g.num_vertices());
  for (const auto& e : g.edges()) boost::add_edge(e.u, e.v, bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

// ---------------------------------------------------------------- blocks

std::vector<Subgraph> blocks(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<int> edge_stack;
  std::vector<Subgraph> out;
  int timer = 0;

  std::function<void(int, int)> dfs = [&](int v, int parent_edge) {
    disc[v] = low[v] = timer++;
    for (int e : g.incident(v)) {
      if (e == parent_edge) continue;
      int w = g.other_end(e, v);
      if (disc[w] < 0) {
        edge_stack.push_back(e);
        dfs(w, e);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= disc[v]) {
          Subgraph block(g);
          while (true) {
            int f = edge_stack.back();
            edge_stack.pop_back();
            block.add_edge(f);
            if (f == e) break;
          }
          out.push_back(std::move(block));
        }
      } else if (disc[w] < disc[v]) {
        edge_stack.push_back(e);
        low[v] = std::min(low[v], disc[w]);
      }
    }
  };

  for (int v = 0; v < n; ++v) {
    if (disc[v] >= 0) continue;
    if (g.degree(v) == 0) {
      out.push_back(Subgraph::of_vertex(g, v));
      disc[v] = timer++;
      continue;
    }
    dfs(v, -1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------- isomorphism

bool are_isomorphic(const Graph& a, const Graph& b) {
  const int n = a.num_vertices();
  if (n != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  std::vector<int> da, db;
  for (int v = 0; v < n; ++v) {
    da.push_back(a.degree(v));
    db.push_back(b.degree(v));
  }
  std::vector<int> sa = da, sb = db;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;

  // Assign vertices of `a` in BFS order so that adjacency constraints prune early.
  std::vector<int> order;
  Bits seen(n);
  for (int s = 0; s < n; ++s) {
    if (seen.test(s)) continue;
    std::deque<int> queue{s};
    seen.set(s);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      order.push_back(v);
      for (int w : a.neighbors(v)) {
        if (!seen.test(w)) {
          seen.set(w);
          queue.push_back(w);
        }
      }
    }
  }
  std::vector<int> map(n, -1);
  Bits used(n);
  std::function<bool(int)> assign = [&](int k) {
    if (k == n) return true;
    int v = order[k];
    for (int w = 0; w < n; ++w) {
      if (used.test(w) || db[w] != da[v]) continue;
      bool ok = true;
      for (int j = 0; j < k && ok; ++j) {
        int u = order[j];
        bool ea = a.edge_between(u, v) >= 0;
        bool eb = b.edge_between(map[u], w) >= 0;
        ok = ea == eb;
      }
      if (!ok) continue;
      map[v] = w;
      used.set(w);
      if (assign(k + 1)) return true;
      used.reset(w);
      map[v] = -1;
    }
    return false;
  };
  return assign(0);
}

}  // namespace gbg
