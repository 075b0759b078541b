#include "gbg/families.hpp"

#include <utility>
#include <vector>

namespace gbg::families {

namespace {

using EdgeList = std::vector<std::pair<std::string, std::string>>;

std::string s(int i) { return std::to_string(i); }

Graph generalized_petersen(int n, int k) {
  EdgeList e;
  for (int i = 0; i < n; ++i) {
    e.emplace_back("u" + s(i), "u" + s((i + 1) % n));
    e.emplace_back("u" + s(i), "v" + s(i));
    e.emplace_back("v" + s(i), "v" + s((i + k) % n));
  }
  return Graph(e);
}

}  // namespace

Graph path(int edges) {
  EdgeList e;
  for (int i = 0; i < edges; ++i) e.emplace_back(s(i), s(i + 1));
  return Graph(e, {"0"});
}

Graph cycle(int length) {
  EdgeList e;
  for (int i = 0; i < length; ++i) e.emplace_back(s(i), s((i + 1) % length));
  return Graph(e);
}

Graph star(int leaves) {
  EdgeList e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back("c", "l" + s(i));
  return Graph(e, {"c"});
}

Graph complete(int n) {
  EdgeList e;
  std::vector<std::string> isolated;
  for (int i = 0; i < n; ++i) {
    isolated.push_back(s(i));
    for (int j = i + 1; j < n; ++j) e.emplace_back(s(i), s(j));
  }
  return Graph(e, isolated);
}

Graph complete_bipartite(int a, int b) {
  EdgeList e;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) e.emplace_back("a" + s(i), "b" + s(j));
  }
  return Graph(e);
}

Graph dumbbell() {
  return Graph(EdgeList{{"a1", "a2"}, {"a2", "a3"}, {"a1", "a3"},
                        {"b1", "b2"}, {"b2", "b3"}, {"b1", "b3"},
                        {"a1", "b1"}});
}

Graph elementary(int k, int l) {
  EdgeList e;
  for (int i = 1; i <= k; ++i) e.emplace_back("c", "l" + s(i));
  for (int i = 1; i <= l; ++i) {
    e.emplace_back("c", "t" + s(i) + "a");
    e.emplace_back("c", "t" + s(i) + "b");
    e.emplace_back("t" + s(i) + "a", "t" + s(i) + "b");
  }
  return Graph(e, {"c"});
}

Graph petersen() { return generalized_petersen(5, 2); }

Graph dodecahedral() { return generalized_petersen(10, 2); }

}  // namespace gbg::families
