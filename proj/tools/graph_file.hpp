#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "gbg/grapes.hpp"
#include "gbg/graph.hpp"

namespace gbg::cli {

// Parsed graph file.  Lines are `e <u> <v>`, `v <name>`, `loops <v> <k>`;
// `#` starts a comment.
struct GraphFile {
  Graph graph;
  std::map<std::string, int> loops;
};

// Throws InvalidInput with a "source:line:col: message" diagnostic.
GraphFile parse_graph_text(const std::string& text, const std::string& source);

// Throws InvalidInput when the file cannot be read.
std::string read_file(const std::string& path);

std::uint64_t fnv1a64(const std::string& bytes);
std::string hex_digest(const std::string& bytes);

// With loops annotations the graph is the stem; otherwise the graph is
// recognized as a bunch of grapes.  nullopt when it is not one.
std::optional<Grapes> grapes_of(const GraphFile& f, const std::string& source);

}  // namespace gbg::cli
