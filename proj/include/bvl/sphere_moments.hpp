#pragma once

// Exact monomial integrals over the unit sphere (normalized measure),
// moment matrices for the spectrahedral cones of nonnegative forms, and
// the associated membership test.

#include <optional>
#include <stdexcept>
#include <vector>

#include "bvl/multiindex.hpp"
#include "bvl/numerics.hpp"
#include "bvl/polynomial.hpp"
#include "bvl/rational.hpp"

namespace bvl {

// Normalized Folland formula: with mu the rotation-invariant probability
// measure on S^{n-1},
//
//   int x^gamma dmu = prod_i (gamma_i - 1)!! / prod_{t=0}^{M-1} (n + 2t)
//
// where M = (sum gamma_i)/2, and the integral vanishes when any exponent is
// odd.  This is the Gamma-at-half-integers expression divided by the total
// surface measure, so all values are exact rationals and the zero index
// integrates to exactly 1.
inline Rat monomial_sphere_integral(const MultiIndex& alpha) {
  const int n = alpha.n();
  if (n < 2) throw std::invalid_argument("monomial_sphere_integral: need n >= 2");
  if (alpha.any_odd()) return Rat(0);
  Int num(1);
  for (int e : alpha.exponents) {
    // (e-1)!! for even e
    for (int t = e - 1; t >= 1; t -= 2) num *= t;
  }
  Int den(1);
  const int m = alpha.degree() / 2;
  for (int t = 0; t < m; ++t) den *= (n + 2 * t);
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat sphere_integral(const HomogPoly& p) {
  Rat s(0);
  for (const auto& [a, c] : p.terms) s += c * monomial_sphere_integral(a);
  return s;
}

// Exact rational moment matrix of p at level k: rows/columns indexed by the
// graded-lex monomial basis of degree 2k, entries
//   M(p)_{b1,b2} = sum_alpha p_alpha * int x^{alpha+b1+b2} dmu.
inline std::vector<std::vector<Rat>> moment_matrix_exact(const HomogPoly& p, int k) {
  if (p.degree % 2 != 0) throw std::invalid_argument("moment_matrix: degree must be even");
  if (k < 0) throw std::invalid_argument("moment_matrix: k must be >= 0");
  auto basis = basis_multiindices(p.n, 2 * k);
  const int sz = static_cast<int>(basis.size());
  std::vector<std::vector<Rat>> m(sz, std::vector<Rat>(sz, Rat(0)));
  for (int i = 0; i < sz; ++i)
    for (int j = i; j < sz; ++j) {
      Rat v(0);
      MultiIndex bb = basis[i] + basis[j];
      for (const auto& [a, c] : p.terms) v += c * monomial_sphere_integral(a + bb);
      m[i][j] = v;
      m[j][i] = v;
    }
  return m;
}

inline SymMatrix moment_matrix(const HomogPoly& p, int k) {
  auto ex = moment_matrix_exact(p, k);
  const int sz = static_cast<int>(ex.size());
  SymMatrix m(sz);
  for (int i = 0; i < sz; ++i)
    for (int j = 0; j <= i; ++j) m.at(i, j) = to_double(ex[i][j]);
  return m;
}

enum class Membership { Inside, Outside, Borderline };

// Exact PSD decision for a rational symmetric matrix via pivoted LDL^T:
// a symmetric matrix is PSD iff the elimination below never meets a negative
// pivot and every zero pivot has a zero row.
inline bool exact_psd(std::vector<std::vector<Rat>> m) {
  const int sz = static_cast<int>(m.size());
  for (int k = 0; k < sz; ++k) {
    if (m[k][k] < 0) return false;
    if (m[k][k] == 0) {
      for (int j = k + 1; j < sz; ++j)
        if (m[k][j] != 0) return false;
      continue;
    }
    // Schur complement of the pivot; the trailing block stays symmetric.
    for (int i = k + 1; i < sz; ++i) {
      if (m[i][k] == 0) continue;
      Rat f = m[i][k] / m[k][k];
      for (int j = k + 1; j < sz; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return true;
}

struct MembershipResult {
  Membership verdict = Membership::Borderline;
  // For Outside: witness q in F_k (coefficients over the graded-lex basis of
  // degree 2k) with int p q^2 dmu < 0, re-certified in exact rationals.
  std::optional<std::vector<double>> witness;
  std::optional<Rat> certified_value;  // exact int p q^2 dmu for the witness
  double min_eigenvalue = 0.0;
  double scale = 0.0;  // 1 + ||M||_F
};

// Membership of p in the spectrahedral outer approximation at level k.
// Inside when the moment matrix is PSD up to the uniform tolerance band;
// Outside returns the most-negative eigenvector as a witness, whose value
// int p q^2 dmu is recomputed exactly in rationals.
inline MembershipResult membership_test(const HomogPoly& p, int k) {
  auto exact = moment_matrix_exact(p, k);
  const int sz = static_cast<int>(exact.size());
  SymMatrix m(sz);
  for (int i = 0; i < sz; ++i)
    for (int j = 0; j <= i; ++j) m.at(i, j) = to_double(exact[i][j]);

  MembershipResult res;
  EigResult eg = sym_eig(m);
  res.min_eigenvalue = eg.values.back();
  res.scale = 1.0 + m.frobenius_norm();
  const double band = 1e-8 * res.scale;

  if (res.min_eigenvalue >= band) {
    res.verdict = Membership::Inside;
    return res;
  }

  // Exact certification of the float eigenvector for the most negative
  // eigenvalue: value = q' M q recomputed in rationals.
  auto certify = [&](const std::vector<double>& q) {
    std::vector<Rat> qr(sz);
    for (int i = 0; i < sz; ++i) qr[i] = rat_from_double(q[i]);
    Rat value(0);
    for (int i = 0; i < sz; ++i) {
      if (qr[i] == 0) continue;
      for (int j = 0; j < sz; ++j) {
        if (qr[j] == 0) continue;
        value += qr[i] * qr[j] * exact[i][j];
      }
    }
    return value;
  };

  if (res.min_eigenvalue <= -band) {
    res.verdict = Membership::Outside;
    res.witness = eg.vectors.back();
    res.certified_value = certify(eg.vectors.back());
    return res;
  }

  // The minimum eigenvalue sits inside the tolerance band: escalate to an
  // exact rational PSD decision so boundary cases (e.g. nonnegative forms
  // with zeros on the sphere) are reported honestly.
  if (exact_psd(exact)) {
    res.verdict = Membership::Inside;
    return res;
  }
  Rat value = certify(eg.vectors.back());
  if (value < 0) {
    res.verdict = Membership::Outside;
    res.witness = eg.vectors.back();
    res.certified_value = value;
  } else {
    res.verdict = Membership::Borderline;
  }
  return res;
}

}  // namespace bvl
