#pragma once

#include <string>

#include "gbg/graph.hpp"

// Named graph families.  Vertices are named by decimal indices unless noted.
namespace gbg::families {

Graph path(int edges);
Graph cycle(int length);
Graph star(int leaves);
Graph complete(int n);
Graph complete_bipartite(int a, int b);
// Two triangles joined by a single bridge edge.
Graph dumbbell();
// Center "c" with k pendant edges and l triangles attached at "c".
Graph elementary(int k, int l);
Graph petersen();
Graph dodecahedral();

}  // namespace gbg::families
