#pragma once

// Multi-indices (exponent vectors) and the graded-lexicographic monomial
// basis used to index moment-matrix rows and columns.

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace bvl {

struct MultiIndex {
  std::vector<int> exponents;

  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> e) : exponents(std::move(e)) {}

  int n() const { return static_cast<int>(exponents.size()); }

  int degree() const {
    int d = 0;
    for (int e : exponents) d += e;
    return d;
  }

  bool any_odd() const {
    for (int e : exponents)
      if (e % 2 != 0) return true;
    return false;
  }

  MultiIndex operator+(const MultiIndex& o) const {
    if (n() != o.n()) throw std::invalid_argument("MultiIndex size mismatch");
    MultiIndex r = *this;
    for (int i = 0; i < n(); ++i) r.exponents[i] += o.exponents[i];
    return r;
  }

  bool operator==(const MultiIndex& o) const { return exponents == o.exponents; }

  // Graded lexicographic: lower total degree first, then lexicographic on
  // the exponent vector with x1 > x2 > ... (larger first exponent earlier).
  bool operator<(const MultiIndex& o) const {
    int da = degree(), db = o.degree();
    if (da != db) return da < db;
    return exponents > o.exponents;  // lex: (2,0) before (1,1) before (0,2)
  }
};

// All multi-indices of length n and total degree deg, in graded-lex order.
// Count is C(n+deg-1, n-1).
inline std::vector<MultiIndex> basis_multiindices(int n, int deg) {
  if (n < 1 || deg < 0) throw std::invalid_argument("basis_multiindices: bad arguments");
  std::vector<MultiIndex> out;
  std::vector<int> cur(n, 0);
  // Recursive descent emitting exponents in decreasing-first-coordinate order.
  auto rec = [&](auto&& self, int pos, int rem) -> void {
    if (pos == n - 1) {
      cur[pos] = rem;
      out.emplace_back(cur);
      return;
    }
    for (int e = rem; e >= 0; --e) {
      cur[pos] = e;
      self(self, pos + 1, rem - e);
    }
  };
  rec(rec, 0, deg);
  return out;
}

}  // namespace bvl
