#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace gbg {

// Sparse integer matrix; each row lists (column, value) pairs with strictly
// increasing columns and nonzero values.
struct SparseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<std::pair<int, std::int64_t>>> entries;
};

// Rank over the rationals, computed by fraction-free row reduction.
// Entries are kept primitive (divided by their gcd) after every step; the
// reduction restarts in arbitrary precision if 64-bit arithmetic overflows.
std::size_t exact_rank(const SparseMatrix& m);

}  // namespace gbg
