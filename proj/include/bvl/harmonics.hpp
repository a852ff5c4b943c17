#pragma once

// Legendre / zonal-harmonic machinery on S^{n-1}: harmonic space dimensions,
// zonal profile polynomials, harmonic decomposition, one-dimensional marginal
// moments, and Legendre root computations.

#include <cmath>
#include <stdexcept>
#include <vector>

#include "bvl/multiindex.hpp"
#include "bvl/polynomial.hpp"
#include "bvl/rational.hpp"

namespace bvl {

// Legendre polynomial via the Rodrigues formula
//   L_m = 1/(m! 2^m) d^m/dx^m (x^2-1)^m,
// exact rational coefficients, L_m(1) = 1.
inline UniPoly legendre(int m) {
  if (m < 0) throw std::invalid_argument("legendre: m must be >= 0");
  // (x^2-1)^m
  std::vector<Rat> c(2 * m + 1, Rat(0));
  for (int j = 0; j <= m; ++j) c[2 * j] = Rat(binomial(m, j)) * rat_pow(Rat(-1), m - j);
  UniPoly p{std::vector<Rat>(c)};
  for (int t = 0; t < m; ++t) p = p.derivative();
  Rat scale = Rat(1, factorial(m)) / rat_pow(Rat(2), m);
  return p * scale;
}

// dim H_m for S^{n-1}: h_0 = 1, h_1 = n, and the binomial difference above.
inline long harmonic_dim(int n, int m) {
  if (n < 2 || m < 0) throw std::invalid_argument("harmonic_dim: bad arguments");
  if (m == 0) return 1;
  if (m == 1) return n;
  Int r = binomial(n + m - 1, n - 1) - binomial(n + m - 3, n - 1);
  return r.get_si();
}

// Moments of the x1-marginal of the normalized sphere measure:
//   m_j = int t^j w_n(t) dt,  w_n(t) ~ (1-t^2)^{(n-3)/2} normalized to mass 1,
// so m_0 = 1, odd moments vanish, and m_{2a} = prod_{i=1..a} (2i-1)/(n+2i-2).
inline std::vector<Rat> marginal_moments(int n, int max_deg) {
  if (n < 2 || max_deg < 0) throw std::invalid_argument("marginal_moments: bad arguments");
  std::vector<Rat> m(max_deg + 1, Rat(0));
  m[0] = 1;
  Rat even(1);
  for (int a = 1; 2 * a <= max_deg; ++a) {
    Rat step(2 * a - 1, n + 2 * a - 2);
    step.canonicalize();
    even *= step;
    m[2 * a] = even;
  }
  return m;
}

namespace detail {
inline Rat weighted_inner(const UniPoly& a, const UniPoly& b, const std::vector<Rat>& mom) {
  Rat s(0);
  for (int i = 0; i <= a.degree(); ++i) {
    if (a.coeff(i) == 0) continue;
    for (int j = 0; j <= b.degree(); ++j) {
      if (b.coeff(j) == 0) continue;
      s += a.coeff(i) * b.coeff(j) * mom[i + j];
    }
  }
  return s;
}
}  // namespace detail

// Zonal profile P_{m,n}: the degree-m polynomial with
// Z_m(u) = h_m P_{m,n}(u_1) on S^{n-1}, built from first principles as the
// degree-m orthogonal polynomial for the marginal weight w_n, normalized
// P_{m,n}(1) = 1.  Coincides with the classical Legendre polynomial exactly
// when n = 3 (and for m <= 1 at any n).
inline UniPoly zonal_profile(int n, int m) {
  if (n < 2 || m < 0) throw std::invalid_argument("zonal_profile: bad arguments");
  std::vector<Rat> mom = marginal_moments(n, 2 * m + 2);
  std::vector<UniPoly> basis;
  for (int deg = 0; deg <= m; ++deg) {
    std::vector<Rat> c(deg + 1, Rat(0));
    c[deg] = 1;
    UniPoly p{std::move(c)};
    for (const UniPoly& q : basis) {
      Rat coef = detail::weighted_inner(p, q, mom) / detail::weighted_inner(q, q, mom);
      p = p - q * coef;
    }
    basis.push_back(p);
  }
  UniPoly p = basis[m];
  Rat at_one = p.eval(Rat(1));
  if (at_one == 0) throw std::runtime_error("zonal_profile: degenerate normalization");
  return p * (Rat(1) / at_one);
}

// ---------------------------------------------------------------------------
// Harmonic decomposition q = p_m + s p_{m-2} + s^2 p_{m-4} + ... with each
// p_j harmonic, computed by an exact rational linear solve over monomial
// coefficients (reconstruction equations + Laplacian-vanishing equations).
// ---------------------------------------------------------------------------
struct HarmonicDecomposition {
  int source_degree = 0;
  std::vector<HomogPoly> components;  // p_m, p_{m-2}, ..., ending at p_{m mod 2}

  HomogPoly reconstruct(int n) const {
    HomogPoly s = radius_squared(n);
    HomogPoly acc(n, source_degree);
    for (size_t i = 0; i < components.size(); ++i)
      acc += poly_pow(s, static_cast<int>(i)) * components[i];
    return acc;
  }
};

inline HarmonicDecomposition harmonic_decompose(const HomogPoly& q) {
  const int n = q.n;
  const int m = q.degree;
  const int parts = m / 2 + 1;  // degrees m, m-2, ..., m-2*(parts-1)

  // Variable layout: coefficients of p_{m-2i} over the graded-lex basis.
  std::vector<std::vector<MultiIndex>> part_basis(parts);
  std::vector<int> offset(parts + 1, 0);
  for (int i = 0; i < parts; ++i) {
    part_basis[i] = basis_multiindices(n, m - 2 * i);
    offset[i + 1] = offset[i] + static_cast<int>(part_basis[i].size());
  }
  const int nvars = offset[parts];

  auto index_of = [](const std::vector<MultiIndex>& basis, const MultiIndex& a) {
    auto it = std::lower_bound(basis.begin(), basis.end(), a);
    return static_cast<int>(it - basis.begin());
  };

  std::vector<std::vector<Rat>> rows;
  std::vector<Rat> rhs;

  // Reconstruction: sum_i [s^i p_{m-2i}]_alpha = q_alpha for each |alpha| = m.
  HomogPoly s = radius_squared(n);
  std::vector<HomogPoly> spow(parts);
  for (int i = 0; i < parts; ++i) spow[i] = poly_pow(s, i);
  auto full_basis = basis_multiindices(n, m);
  for (const MultiIndex& alpha : full_basis) {
    std::vector<Rat> row(nvars, Rat(0));
    for (int i = 0; i < parts; ++i) {
      // coefficient of x^alpha in s^i * x^beta is [s^i]_{alpha-beta}
      for (int b = 0; b < static_cast<int>(part_basis[i].size()); ++b) {
        MultiIndex diff = alpha;
        bool ok = true;
        for (int v = 0; v < n; ++v) {
          diff.exponents[v] -= part_basis[i][b].exponents[v];
          if (diff.exponents[v] < 0) { ok = false; break; }
        }
        if (!ok) continue;
        auto it = spow[i].terms.find(diff);
        if (it != spow[i].terms.end()) row[offset[i] + b] = it->second;
      }
    }
    rows.push_back(std::move(row));
    auto qt = q.terms.find(alpha);
    rhs.push_back(qt == q.terms.end() ? Rat(0) : qt->second);
  }

  // Harmonicity: Laplacian of each part vanishes coefficientwise.
  for (int i = 0; i < parts; ++i) {
    int deg = m - 2 * i;
    if (deg < 2) continue;
    auto lap_basis = basis_multiindices(n, deg - 2);
    for (const MultiIndex& beta : lap_basis) {
      std::vector<Rat> row(nvars, Rat(0));
      // [Laplacian x^gamma]_beta = gamma_v (gamma_v - 1) when gamma = beta + 2e_v
      for (int v = 0; v < n; ++v) {
        MultiIndex gamma = beta;
        gamma.exponents[v] += 2;
        int e = gamma.exponents[v];
        row[offset[i] + index_of(part_basis[i], gamma)] = Rat(e * (e - 1));
      }
      rows.push_back(std::move(row));
      rhs.push_back(Rat(0));
    }
  }

  // Exact Gaussian elimination; the system is consistent with a unique
  // solution by the uniqueness of the harmonic decomposition.
  const int neq = static_cast<int>(rows.size());
  std::vector<int> pivot_col(neq, -1);
  int rank = 0;
  for (int col = 0; col < nvars && rank < neq; ++col) {
    int piv = -1;
    for (int r = rank; r < neq; ++r)
      if (rows[r][col] != 0) { piv = r; break; }
    if (piv < 0) continue;
    std::swap(rows[rank], rows[piv]);
    std::swap(rhs[rank], rhs[piv]);
    Rat inv = Rat(1) / rows[rank][col];
    for (int c = col; c < nvars; ++c) rows[rank][c] *= inv;
    rhs[rank] *= inv;
    for (int r = 0; r < neq; ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      Rat f = rows[r][col];
      for (int c = col; c < nvars; ++c) rows[r][c] -= f * rows[rank][c];
      rhs[r] -= f * rhs[rank];
    }
    pivot_col[rank] = col;
    ++rank;
  }
  for (int r = rank; r < neq; ++r)
    if (rhs[r] != 0) throw std::runtime_error("harmonic_decompose: inconsistent system");

  std::vector<Rat> x(nvars, Rat(0));
  for (int r = 0; r < rank; ++r) x[pivot_col[r]] = rhs[r];

  HarmonicDecomposition dec;
  dec.source_degree = m;
  for (int i = 0; i < parts; ++i) {
    HomogPoly p(n, m - 2 * i);
    for (int b = 0; b < static_cast<int>(part_basis[i].size()); ++b)
      if (x[offset[i] + b] != 0) p.add_term(part_basis[i][b], x[offset[i] + b]);
    dec.components.push_back(std::move(p));
  }
  return dec;
}

// ---------------------------------------------------------------------------
// Legendre roots.
// ---------------------------------------------------------------------------

// First positive root of the Bessel function J0, refined by Newton on the
// power series; kept as a documented cross-check for the hard constant used
// by gatteschi_root.
inline double bessel_j0_first_root() {
  auto j0 = [](double x) {
    double term = 1.0, sum = 1.0;
    for (int k = 1; k <= 40; ++k) {
      term *= -(x * x) / (4.0 * k * k);
      sum += term;
    }
    return sum;
  };
  auto j1 = [](double x) {  // J0' = -J1
    double term = x / 2.0, sum = term;
    for (int k = 1; k <= 40; ++k) {
      term *= -(x * x) / (4.0 * k * (k + 1));
      sum += term;
    }
    return sum;
  };
  double x = 2.4;
  for (int it = 0; it < 30; ++it) x += j0(x) / j1(x);
  return x;
}

// Gatteschi's high-order approximation for the largest root of L_{2d}.
inline double gatteschi_root(int d) {
  if (d < 1) throw std::invalid_argument("gatteschi_root: d must be >= 1");
  constexpr double beta = 2.404825557695773;  // first positive root of J0
  double t = 4.0 * d * d + 2.0 * d + 1.0 / 3.0;
  double angle = beta / std::sqrt(t) * (1.0 - (beta * beta - 2.0) / (360.0 * t * t));
  return std::cos(angle);
}

// Largest real root of L_m to absolute accuracy 1e-12: the interlacing
// property gives the bracket (largest root of L_{m-1}, 1); safeguarded
// Newton started from the Gatteschi approximation when available.
inline double largest_legendre_root(int m) {
  if (m < 1) throw std::invalid_argument("largest_legendre_root: m must be >= 1");
  if (m == 1) return 0.0;
  // Evaluate L_m and L_m' by the three-term recurrence.
  auto eval = [m](double x, double& deriv) {
    double pm1 = 1.0, p = x;
    for (int j = 2; j <= m; ++j) {
      double pn = ((2.0 * j - 1.0) * x * p - (j - 1.0) * pm1) / j;
      pm1 = p;
      p = pn;
    }
    deriv = m * (x * p - pm1) / (x * x - 1.0);
    return p;
  };
  double lo = largest_legendre_root(m - 1);
  double hi = 1.0;
  double x = (m >= 6 && m % 2 == 0) ? gatteschi_root(m / 2) : 0.5 * (lo + hi);
  if (x <= lo || x >= hi) x = 0.5 * (lo + hi);
  double dlo;
  double flo = eval(lo, dlo);
  for (int it = 0; it < 200; ++it) {
    double df;
    double f = eval(x, df);
    if (f == 0.0) return x;
    if ((f > 0) == (flo > 0)) lo = x; else hi = x;
    double step = f / df;
    double xn = x - step;
    if (!(xn > lo && xn < hi)) xn = 0.5 * (lo + hi);  // bisection safeguard
    if (std::fabs(xn - x) < 1e-15) return xn;
    x = xn;
    if (hi - lo < 1e-13) break;
  }
  return 0.5 * (lo + hi);
}

}  // namespace bvl
