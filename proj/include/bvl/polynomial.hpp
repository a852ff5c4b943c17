#pragma once

// Sparse homogeneous polynomials in n variables and dense univariate
// polynomials, both over exact rationals.

#include <map>
#include <stdexcept>
#include <vector>

#include "bvl/multiindex.hpp"
#include "bvl/rational.hpp"

namespace bvl {

// ---------------------------------------------------------------------------
// Homogeneous n-variate polynomial, keyed by exponent multi-index.
// Invariant: all stored multi-indices have the declared degree and no zero
// coefficient is stored.
// ---------------------------------------------------------------------------
struct HomogPoly {
  int n = 0;
  int degree = 0;
  std::map<MultiIndex, Rat> terms;

  HomogPoly() = default;
  HomogPoly(int n_, int degree_) : n(n_), degree(degree_) {}

  static HomogPoly monomial(int n, const MultiIndex& alpha, const Rat& c = Rat(1)) {
    HomogPoly p(n, alpha.degree());
    if (c != 0) p.terms.emplace(alpha, c);
    return p;
  }

  void add_term(const MultiIndex& alpha, const Rat& c) {
    if (alpha.n() != n || alpha.degree() != degree)
      throw std::invalid_argument("HomogPoly::add_term: degree/arity mismatch");
    auto it = terms.find(alpha);
    if (it == terms.end()) {
      if (c != 0) terms.emplace(alpha, c);
    } else {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }

  bool is_zero() const { return terms.empty(); }

  HomogPoly& operator+=(const HomogPoly& o) {
    if (o.is_zero()) return *this;
    if (is_zero() && terms.empty() && degree != o.degree) degree = o.degree;
    for (const auto& [a, c] : o.terms) add_term(a, c);
    return *this;
  }

  HomogPoly operator*(const Rat& c) const {
    HomogPoly r(n, degree);
    if (c == 0) return r;
    for (const auto& [a, v] : terms) r.terms.emplace(a, v * c);
    return r;
  }

  HomogPoly operator*(const HomogPoly& o) const {
    if (n != o.n) throw std::invalid_argument("HomogPoly::operator*: arity mismatch");
    HomogPoly r(n, degree + o.degree);
    for (const auto& [a, ca] : terms)
      for (const auto& [b, cb] : o.terms) r.add_term(a + b, ca * cb);
    return r;
  }

  Rat eval(const std::vector<Rat>& x) const {
    Rat s(0);
    for (const auto& [a, c] : terms) {
      Rat t = c;
      for (int i = 0; i < n; ++i) t *= rat_pow(x[i], a.exponents[i]);
      s += t;
    }
    return s;
  }

  double eval(const std::vector<double>& x) const {
    double s = 0;
    for (const auto& [a, c] : terms) {
      double t = to_double(c);
      for (int i = 0; i < n; ++i)
        for (int e = 0; e < a.exponents[i]; ++e) t *= x[i];
      s += t;
    }
    return s;
  }

  // Laplacian; result is homogeneous of degree-2 lower (zero when degree < 2).
  HomogPoly laplacian() const {
    HomogPoly r(n, degree >= 2 ? degree - 2 : 0);
    if (degree < 2) return r;
    for (const auto& [a, c] : terms) {
      for (int i = 0; i < n; ++i) {
        int e = a.exponents[i];
        if (e >= 2) {
          MultiIndex b = a;
          b.exponents[i] -= 2;
          r.add_term(b, c * e * (e - 1));
        }
      }
    }
    return r;
  }
};

inline HomogPoly operator+(HomogPoly a, const HomogPoly& b) {
  a += b;
  return a;
}

// s = x_1^2 + ... + x_n^2.
inline HomogPoly radius_squared(int n) {
  HomogPoly s(n, 2);
  for (int i = 0; i < n; ++i) {
    MultiIndex a(std::vector<int>(n, 0));
    a.exponents[i] = 2;
    s.add_term(a, Rat(1));
  }
  return s;
}

inline HomogPoly poly_pow(const HomogPoly& p, int e) {
  HomogPoly r = HomogPoly::monomial(p.n, MultiIndex(std::vector<int>(p.n, 0)));
  for (int i = 0; i < e; ++i) r = r * p;
  return r;
}

// ---------------------------------------------------------------------------
// Univariate polynomial with exact rational coefficients, ascending degree.
// Invariant: leading coefficient nonzero unless the zero polynomial.
// ---------------------------------------------------------------------------
struct UniPoly {
  std::vector<Rat> coefficients;

  UniPoly() = default;
  explicit UniPoly(std::vector<Rat> c) : coefficients(std::move(c)) { trim(); }

  void trim() {
    while (!coefficients.empty() && coefficients.back() == 0) coefficients.pop_back();
  }

  bool is_zero() const { return coefficients.empty(); }
  int degree() const { return is_zero() ? -1 : static_cast<int>(coefficients.size()) - 1; }

  Rat coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(coefficients.size())) ? coefficients[i] : Rat(0);
  }

  Rat eval(const Rat& x) const {
    Rat s(0);
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) s = s * x + *it;
    return s;
  }

  double eval(double x) const {
    double s = 0;
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it)
      s = s * x + to_double(*it);
    return s;
  }

  UniPoly derivative() const {
    if (degree() <= 0) return UniPoly{};
    std::vector<Rat> d(coefficients.size() - 1);
    for (size_t i = 1; i < coefficients.size(); ++i) d[i - 1] = coefficients[i] * static_cast<long>(i);
    return UniPoly(std::move(d));
  }

  UniPoly operator+(const UniPoly& o) const {
    std::vector<Rat> c(std::max(coefficients.size(), o.coefficients.size()), Rat(0));
    for (size_t i = 0; i < c.size(); ++i) c[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
    return UniPoly(std::move(c));
  }

  UniPoly operator-(const UniPoly& o) const {
    std::vector<Rat> c(std::max(coefficients.size(), o.coefficients.size()), Rat(0));
    for (size_t i = 0; i < c.size(); ++i) c[i] = coeff(static_cast<int>(i)) - o.coeff(static_cast<int>(i));
    return UniPoly(std::move(c));
  }

  UniPoly operator*(const Rat& s) const {
    if (s == 0) return UniPoly{};
    std::vector<Rat> c = coefficients;
    for (auto& v : c) v *= s;
    return UniPoly(std::move(c));
  }

  UniPoly operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly{};
    std::vector<Rat> c(coefficients.size() + o.coefficients.size() - 1, Rat(0));
    for (size_t i = 0; i < coefficients.size(); ++i)
      for (size_t j = 0; j < o.coefficients.size(); ++j)
        c[i + j] += coefficients[i] * o.coefficients[j];
    return UniPoly(std::move(c));
  }

  bool operator==(const UniPoly& o) const { return coefficients == o.coefficients; }
};

// Remainder of polynomial division (exact rational arithmetic).
inline UniPoly uni_rem(UniPoly a, const UniPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("uni_rem: division by zero polynomial");
  while (!a.is_zero() && a.degree() >= b.degree()) {
    Rat q = a.coefficients.back() / b.coefficients.back();
    int shift = a.degree() - b.degree();
    for (int i = 0; i <= b.degree(); ++i) a.coefficients[i + shift] -= q * b.coefficients[i];
    a.trim();
  }
  return a;
}

}  // namespace bvl
