#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <vector>

#include "gbg/graph.hpp"

namespace gbg {

using BigInt = boost::multiprecision::cpp_int;

// k pendant arcs and l cycles at one vertex, k + 2l >= 2.
struct ElementaryType {
  int k = 0;
  int l = 0;
  bool operator==(const ElementaryType&) const = default;
};

// Some when the minimal model of g has at most one essential vertex.
std::optional<ElementaryType> detect_elementary(const Graph& g);

// Rank of the free n-braid group of an elementary graph.  Throws InvalidInput
// when k + 2l < 2 or n < 1.
BigInt elementary_rank(const ElementaryType& t, int n);

// Binomial coefficient; zero when k < 0 or k > n.
BigInt binomial(long long n, long long k);

int cyclomatic_number(const Graph& g);

bool braid_free(const Graph& g, int n);
bool braid_hyperbolic(const Graph& g, int n);

struct FreeRank {
  BigInt rank;
  std::string method;                // "cyclomatic", "tree", "elementary" or "homology"
  std::optional<Graph> subdivision;  // graph whose UD_n gave the rank, for "homology"
};
// nullopt when the braid group is not free.
std::optional<FreeRank> free_rank(const Graph& g, int n);

struct FreeAbelianWitness {
  int p = 0;  // disjoint cycles
  int q = 0;  // essential vertices
  std::vector<Subgraph> cycles;
  std::vector<int> vertices;
};
// Maximizes p + q (then p) subject to p + 2q <= n and pairwise disjointness.
FreeAbelianWitness free_abelian_witness(const Graph& g, int n);

}  // namespace gbg
