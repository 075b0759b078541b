#include "gbg/exact_rank.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <numeric>
#include <stdexcept>

namespace gbg {

namespace {

using BigInt = boost::multiprecision::cpp_int;

struct Overflow : std::exception {};

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow();
  return r;
}

std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow();
  return r;
}

BigInt mul(const BigInt& a, const BigInt& b) { return a * b; }
BigInt sub(const BigInt& a, const BigInt& b) { return a - b; }

std::int64_t gcd_of(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
BigInt gcd_of(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }

template <typename T>
using Row = std::vector<std::pair<int, T>>;

template <typename T>
void make_primitive(Row<T>& r) {
  T g = 0;
  for (const auto& [c, v] : r) {
    g = gcd_of(g, v < 0 ? T(-v) : v);
    if (g == 1) return;
  }
  if (g > 1) {
    for (auto& entry : r) entry.second /= g;
  }
}

// r := p_lead * r - r_lead * p, which cancels the shared leading column.
template <typename T>
Row<T> eliminate(const Row<T>& r, const Row<T>& p) {
  const T a = p.front().second;
  const T b = r.front().second;
  Row<T> out;
  out.reserve(r.size() + p.size());
  std::size_t i = 1, j = 1;
  while (i < r.size() || j < p.size()) {
    if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
      out.emplace_back(r[i].first, mul(a, r[i].second));
      ++i;
    } else if (i == r.size() || p[j].first < r[i].first) {
      out.emplace_back(p[j].first, sub(T(0), mul(b, p[j].second)));
      ++j;
    } else {
      T v = sub(mul(a, r[i].second), mul(b, p[j].second));
      if (v != 0) out.emplace_back(r[i].first, v);
      ++i;
      ++j;
    }
  }
  make_primitive(out);
  return out;
}

template <typename T>
std::size_t rank_with(const SparseMatrix& m) {
  std::map<int, Row<T>> pivots;
  for (const auto& src : m.entries) {
    Row<T> r;
    r.reserve(src.size());
    for (const auto& [c, v] : src) {
      if (v != 0) r.emplace_back(c, T(v));
    }
    make_primitive(r);
    while (!r.empty()) {
      auto it = pivots.find(r.front().first);
      if (it == pivots.end()) {
        int lead = r.front().first;
        pivots.emplace(lead, std::move(r));
        break;
      }
      r = eliminate(r, it->second);
    }
  }
  return pivots.size();
}

}  // namespace

std::size_t exact_rank(const SparseMatrix& m) {
  try {
    return rank_with<std::int64_t>(m);
  } catch (const Overflow&) {
    return rank_with<BigInt>(m);
  }
}

}  // namespace gbg
