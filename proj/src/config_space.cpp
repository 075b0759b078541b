#include "gbg/config_space.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace gbg {

std::vector<Cell> cells_of(const Subgraph& s) {
  const Graph& g = s.parent();
  std::vector<Cell> out;
  for (int v : s.vertex_ids()) out.push_back({v, -1});
  for (int e : s.edge_ids()) out.push_back({g.edge(e).u, g.edge(e).v});
  std::sort(out.begin(), out.end());
  return out;
}

int edge_cell_count(const Config& c) {
  return static_cast<int>(std::count_if(c.begin(), c.end(), [](const Cell& x) { return !x.is_vertex(); }));
}

bool cells_disjoint(const Cell& a, const Cell& b) {
  auto touches = [](const Cell& x, int w) { return x.u == w || x.v == w; };
  if (touches(b, a.u)) return false;
  return a.is_vertex() || !touches(b, a.v);
}

std::string config_key(const Graph& g, const Config& c) {
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += '\t';
    out += g.name(c[i].u);
    if (!c[i].is_vertex()) out += ' ' + g.name(c[i].v);
  }
  return out;
}

Config parse_config_key(const Graph& g, const std::string& key) {
  Config out;
  std::size_t start = 0;
  while (start <= key.size()) {
    std::size_t stop = key.find('\t', start);
    if (stop == std::string::npos) stop = key.size();
    std::string cell = key.substr(start, stop - start);
    std::size_t space = cell.find(' ');
    auto lookup = [&](const std::string& name) {
      int v = g.index_of(name);
      if (v < 0) throw InvalidInput("unknown vertex '" + name + "' in cell key");
      return v;
    };
    if (space == std::string::npos) {
      out.push_back({lookup(cell), -1});
    } else {
      int a = lookup(cell.substr(0, space)), b = lookup(cell.substr(space + 1));
      if (a > b) std::swap(a, b);
      if (g.edge_between(a, b) < 0) throw InvalidInput("cell key names a non-edge '" + cell + "'");
      out.push_back({a, b});
    }
    start = stop + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string config_label(const Graph& g, const Config& c) {
  std::string out = "{";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ", ";
    out += g.name(c[i].u);
    if (!c[i].is_vertex()) out += "-" + g.name(c[i].v);
  }
  return out + "}";
}

CubeComplex complex_from_configs(const Graph& g, std::vector<Config> configs) {
  std::sort(configs.begin(), configs.end(), [](const Config& a, const Config& b) {
    int da = edge_cell_count(a), db = edge_cell_count(b);
    return da != db ? da < db : a < b;
  });
  configs.erase(std::unique(configs.begin(), configs.end()), configs.end());

  CubeComplex x;
  std::vector<std::map<Config, int>> index;
  for (const auto& c : configs) {
    const int d = edge_cell_count(c);
    if (static_cast<int>(index.size()) <= d) index.resize(d + 1);
    std::vector<int> facets;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i].is_vertex()) continue;
      for (int end : {c[i].u, c[i].v}) {
        Config f = c;
        f[i] = {end, -1};
        std::sort(f.begin(), f.end());
        auto it = index[d - 1].find(f);
        if (it == index[d - 1].end()) {
          throw InvalidInput("configuration " + config_label(g, c) + " is missing facet " +
                             config_label(g, f));
        }
        facets.push_back(it->second);
      }
    }
    index[d].emplace(c, x.add_cube(config_key(g, c), facets));
  }
  return x;
}

CubeComplex build_UD(const Graph& g, int n) {
  if (n < 1) throw InvalidInput("number of points must be positive");
  std::vector<Cell> cells = cells_of(Subgraph::whole(g));
  std::vector<Config> configs;
  const std::size_t cap = enumeration_cap();
  Config current;
  Bits used(g.num_vertices());

  std::function<void(std::size_t)> choose = [&](std::size_t from) {
    if (static_cast<int>(current.size()) == n) {
      configs.push_back(current);
      if (configs.size() > cap) {
        throw CapExceeded("configuration count exceeded cap of " + std::to_string(cap));
      }
      return;
    }
    for (std::size_t i = from; i < cells.size(); ++i) {
      const Cell& c = cells[i];
      if (used.test(c.u) || (!c.is_vertex() && used.test(c.v))) continue;
      used.set(c.u);
      if (!c.is_vertex()) used.set(c.v);
      current.push_back(c);
      choose(i + 1);
      current.pop_back();
      used.reset(c.u);
      if (!c.is_vertex()) used.reset(c.v);
    }
  };
  if (g.num_vertices() >= n) choose(0);

  CubeComplex x = complex_from_configs(g, std::move(configs));
  x.metadata["n"] = std::to_string(n);
  x.metadata["sufficiently_subdivided"] = is_sufficiently_subdivided(g, n) ? "true" : "false";
  return x;
}

std::vector<Config> product_subcomplex_cells(const Graph& g, const Subgraph& a, const Subgraph& b) {
  (void)g;
  if (!a.vertex_disjoint(b)) throw InvalidInput("product factors share a vertex");
  std::vector<Config> out;
  for (const Cell& x : cells_of(a)) {
    for (const Cell& y : cells_of(b)) {
      Config c{x, y};
      std::sort(c.begin(), c.end());
      out.push_back(c);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace gbg
