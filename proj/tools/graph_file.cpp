#include "graph_file.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "gbg/errors.hpp"

namespace gbg::cli {

namespace {

struct Token {
  std::string text;
  int column;
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size() || line[i] == '#') break;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

[[noreturn]] void fail(const std::string& source, int line, int column, const std::string& message) {
  throw InvalidInput(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + message);
}

}  // namespace

GraphFile parse_graph_text(const std::string& text, const std::string& source) {
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::string> isolated;
  std::set<std::pair<std::string, std::string>> seen_edges;
  std::set<std::string> names;
  struct LoopLine {
    std::string vertex;
    int k, line, column;
  };
  std::vector<LoopLine> loop_lines;

  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    const std::string& kind = tokens[0].text;
    auto expect = [&](std::size_t n) {
      if (tokens.size() < n) {
        fail(source, line_no, static_cast<int>(line.size()) + 1, "'" + kind + "' needs " + std::to_string(n - 1) + " argument(s)");
      }
      if (tokens.size() > n) fail(source, line_no, tokens[n].column, "unexpected token '" + tokens[n].text + "'");
    };
    if (kind == "e") {
      expect(3);
      std::string u = tokens[1].text, v = tokens[2].text;
      if (u == v) fail(source, line_no, tokens[2].column, "self-loop at '" + u + "'");
      auto key = u < v ? std::make_pair(u, v) : std::make_pair(v, u);
      if (!seen_edges.insert(key).second) fail(source, line_no, tokens[1].column, "repeated edge " + u + " " + v);
      edges.emplace_back(u, v);
      names.insert(u);
      names.insert(v);
    } else if (kind == "v") {
      expect(2);
      isolated.push_back(tokens[1].text);
      names.insert(tokens[1].text);
    } else if (kind == "loops") {
      expect(3);
      const std::string& count = tokens[2].text;
      int k = -1;
      auto [end, ec] = std::from_chars(count.data(), count.data() + count.size(), k);
      if (ec != std::errc() || end != count.data() + count.size() || k < 0) {
        fail(source, line_no, tokens[2].column, "expected a nonnegative integer, got '" + count + "'");
      }
      loop_lines.push_back({tokens[1].text, k, line_no, tokens[1].column});
    } else {
      fail(source, line_no, tokens[0].column, "unknown directive '" + kind + "'");
    }
  }

  GraphFile out;
  for (const auto& l : loop_lines) {
    if (!names.count(l.vertex)) fail(source, l.line, l.column, "loops for unknown vertex '" + l.vertex + "'");
    if (!out.loops.emplace(l.vertex, l.k).second) fail(source, l.line, l.column, "repeated loops for '" + l.vertex + "'");
  }
  if (names.empty()) fail(source, std::max(line_no, 1), 1, "the graph has no vertices");
  out.graph = Graph(edges, isolated);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput(path + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string hex_digest(const std::string& bytes) {
  static const char* digits = "0123456789abcdef";
  std::uint64_t h = fnv1a64(bytes);
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[i] = digits[h & 15];
  return "fnv1a64:" + out;
}

std::optional<Grapes> grapes_of(const GraphFile& f, const std::string& source) {
  if (f.loops.empty()) {
    if (!is_connected(f.graph)) return std::nullopt;
    return recognize_grapes(f.graph);
  }
  if (!is_tree(f.graph)) throw InvalidInput(source + ": loops annotations need a tree stem");
  std::vector<int> loops(f.graph.num_vertices(), 0);
  for (const auto& [name, k] : f.loops) loops[f.graph.index_of(name)] = k;
  return materialize_grapes(f.graph, loops);
}

}  // namespace gbg::cli
