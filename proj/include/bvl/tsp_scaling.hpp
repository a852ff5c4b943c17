#pragma once

// Closed-form scaling-constant upper bounds for the symmetric traveling-
// salesman cones on K_n and K_{n,n}: path-decomposition integrals, the
// matching-certificate constants (alpha_k, beta_k) and their bipartite
// analogues (gamma_k, eta_k), the improved combined bounds, and the
// improvement-ratio data.  Everything is exact big-rational arithmetic;
// floats appear only in reports.

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

#include "bvl/bound_report.hpp"
#include "bvl/rational.hpp"

namespace bvl {

struct GraphFamily {
  enum class Kind { Complete, CompleteBipartite };
  Kind kind = Kind::Complete;
  int n = 0;

  static GraphFamily complete(int n) {
    if (n < 3) throw std::invalid_argument("GraphFamily: K_n requires n >= 3");
    return {Kind::Complete, n};
  }
  static GraphFamily bipartite(int n) {
    if (n < 2) throw std::invalid_argument("GraphFamily: K_{n,n} requires n >= 2");
    return {Kind::CompleteBipartite, n};
  }
  int vertex_count() const { return kind == Kind::Complete ? n : 2 * n; }
};

// Support graph of a squarefree edge monomial, classified as l vertex-
// disjoint non-overlapping paths of total length p, r of them of odd length
// (the bipartite integral depends on r; the complete-graph one does not).
struct PathProfile {
  int l = 0;
  int p = 0;
  int r = 0;
};

// The two values of int x_ij * s dmu across edges, split by membership in
// the base cycle.  Scale varies by context (see scale_note).
struct TwoValueIntegrals {
  Rat on_cycle;
  Rat off_cycle;
  std::string scale_note;
};

namespace detail {

// 2^e as an exact rational, e possibly negative.
inline Rat pow2(int e) {
  return e >= 0 ? Rat(rat_pow(Rat(2), e)) : Rat(1) / rat_pow(Rat(2), -e);
}

}  // namespace detail

// K_n: the fraction of hamiltonian cycles containing a fixed disjoint union
// of l paths of total length p is 2^l (n-p-1)! / (n-1)!.  Supports with
// p > n-1 (or any non-path support, routed by the caller) integrate to 0.
inline Rat kn_path_integral(int n, const PathProfile& profile) {
  if (n < 3 || profile.l < 1 || profile.p < profile.l)
    throw std::invalid_argument("kn_path_integral: invalid profile");
  if (profile.p > n - 1) return Rat(0);
  Rat r = detail::pow2(profile.l) * Rat(factorial(n - profile.p - 1), factorial(n - 1));
  r.canonicalize();
  return r;
}

// K_{n,n}: for l disjoint paths of total length p, r of them odd,
//   2^{l-r+1} (2n-p-1)! / (n!(n-1)!) * C(2n-p-r, (2n-p-r)/2)^{-1}.
inline Rat knn_path_integral(int n, const PathProfile& profile) {
  if (n < 2 || profile.l < 1 || profile.p < profile.l || profile.r < 0 ||
      profile.r > profile.l)
    throw std::invalid_argument("knn_path_integral: invalid profile");
  if (profile.p > 2 * n - 1) return Rat(0);
  if ((2 * n - profile.p - profile.r) % 2 != 0)
    throw std::invalid_argument("knn_path_integral: parity mismatch (not a bipartite path system)");
  int m = 2 * n - profile.p - profile.r;
  Rat r = detail::pow2(profile.l - profile.r + 1) *
          Rat(factorial(2 * n - profile.p - 1), factorial(n) * factorial(n - 1)) /
          Rat(binomial(m, m / 2));
  r.canonicalize();
  return r;
}

// Matching-certificate constants (alpha_k, beta_k) for K_n: the two values
// of int x_ij s_k dmu (up to a common positive scale), on-cycle vs off-cycle.
inline TwoValueIntegrals veomett_constants(int n, int k) {
  if (n < 4 || k < 1 || k > n / 2)
    throw std::invalid_argument("veomett_constants: need 1 <= k <= floor(n/2), n >= 4");
  TwoValueIntegrals tv;
  tv.scale_note = "common positive scale; only beta/(alpha-beta) feeds bounds";
  if (n % 2 == 0) {
    int r = n / 2;
    Rat poly = Rat(4 * (k + 2)) * r * r - Rat(2 * (k * (k + 7) + 4)) * r + Rat(3 * k * (k + 3));
    tv.on_cycle = detail::pow2(k - 2) * poly *
                  Rat(factorial(r - 2) * factorial(2 * r - k - 2),
                      factorial(k) * factorial(r - k));
    tv.off_cycle = detail::pow2(k - 1) *
                   Rat((binomial(r - 2, k - 2) + 4 * binomial(r - 1, k)) *
                       factorial(2 * r - k - 2));
  } else {
    int r = (n - 1) / 2;
    Rat apoly = Rat(4 * (k + 2)) * r * r - Rat(2 * k * (k + 4)) * r + Rat((k - 1) * k + 4 * r);
    tv.on_cycle = detail::pow2(k - 2) * apoly *
                  Rat(factorial(r - 1) * factorial(2 * r - k - 1),
                      factorial(k) * factorial(r - k));
    Rat bpoly = Rat(k * k * (2 * r - 1)) - Rat(8 * k) * r * r + Rat(6 * k * r + k) +
                Rat(4 * (r - 1)) * r * (2 * r + 1);
    tv.off_cycle = detail::pow2(k - 2) * bpoly *
                   Rat(factorial(r - 2) * factorial(2 * r - k - 1),
                       factorial(k) * factorial(r - k));
  }
  tv.on_cycle.canonicalize();
  tv.off_cycle.canonicalize();
  return tv;
}

// Exact values backing kn_bound: the plain single-certificate bound, the
// improved combined-certificate bound, and the n/k + 10/n cap.
struct KnBoundValues {
  Rat veomett;
  Rat improved;
  Rat cap;
};

inline KnBoundValues kn_bound_exact(int n, int k) {
  TwoValueIntegrals base = veomett_constants(n, k);
  KnBoundValues v;
  v.veomett = Rat(1) + Rat(n - 1, 2) * base.off_cycle / (base.on_cycle - base.off_cycle);
  Rat num(0), den(0);
  int hi = std::min(n / 2, 2 * k);
  for (int i = k; i <= hi; ++i) {
    TwoValueIntegrals tv = veomett_constants(n, i);
    Rat c = Rat(binomial(i, k));
    num += c * tv.off_cycle;
    den += c * (tv.on_cycle - tv.off_cycle);
  }
  v.improved = Rat(1) + Rat(n - 1, 2) * num / den;
  v.cap = Rat(n, k) + Rat(10, n);
  v.veomett.canonicalize();
  v.improved.canonicalize();
  v.cap.canonicalize();
  return v;
}

// Computer-aided simplifications of the improved K_n bound at k = 1.
inline Rat kn_k1_closed_form(int n) {
  if (n < 4) throw std::invalid_argument("kn_k1_closed_form: need n >= 4");
  Rat v;
  if (n % 2 == 0) {
    v = Rat(2 * n, 3) + Rat(4 * n) / Rat(3 * (3 * n * n - 15 * n + 16));
  } else {
    v = Rat(2 * n, 3) - Rat(2, 5 * (n - 2)) + Rat(154, 45 * (3 * n - 11)) + Rat(1, 9);
  }
  v.canonicalize();
  return v;
}

inline BoundReport kn_bound(int n, int k) {
  KnBoundValues v = kn_bound_exact(n, k);
  BoundReport rep;
  rep.method = "improved-kn";
  rep.graph = "kn";
  rep.n = n;
  rep.k = k;
  rep.exact = v.improved;
  rep.bound = to_double(v.improved);
  rep.companion = to_double(v.veomett);
  rep.companion_label = "veomett";
  return rep;
}

// Bipartite constants (gamma_k, eta_k) at the scale n!(n-1)!/2 times the
// normalized integral.  Terms whose combinatorial prefactor vanishes are
// zero even when the accompanying inverse binomial is undefined (the
// formulas only reference those inverses with zero weight).
inline TwoValueIntegrals knn_constants(int n, int k) {
  if (n < 2 || k < 1 || k > n)
    throw std::invalid_argument("knn_constants: need 1 <= k <= n, n >= 2");
  // prefac * fact / C(bn, bk); zero prefactor short-circuits.
  auto term = [](const Int& prefac, const Int& fact, int bn, int bk) {
    if (prefac == 0) return Rat(0);
    Int b = binomial(bn, bk);
    if (b == 0) throw std::logic_error("knn_constants: undefined inverse with nonzero weight");
    Rat r = Rat(prefac * fact) / Rat(b);
    return r;
  };
  const Int f1 = factorial(2 * n - k - 1);
  const Int f2 = factorial(2 * n - k - 2);
  TwoValueIntegrals tv;
  tv.scale_note = "n!(n-1)!/2 times the normalized integral";
  Rat shared = term(binomial(n - 2, k), f2, 2 * (n - k - 1), n - k - 1) +
               4 * term(binomial(n - 2, k - 1), f2, 2 * n - 2 * k, n - k) +
               term(binomial(n - 2, k - 2), f2, 2 * n - 2 * k, n - k);
  tv.on_cycle = term(binomial(n - 1, k - 1), f1, 2 * n - 2 * k, n - k) +
                term(binomial(n - 1, k), f2, 2 * (n - k - 1), n - k - 1) + shared;
  tv.off_cycle = 2 * shared;
  tv.on_cycle.canonicalize();
  tv.off_cycle.canonicalize();
  return tv;
}

struct KnnBoundValues {
  std::optional<Rat> cap;  // absent when the denominator degenerates
  Rat improved;
};

inline KnnBoundValues knn_bound_exact(int n, int k) {
  // n = 2 is degenerate: K_{2,2} has a single hamiltonian cycle containing
  // every edge, so the certificate denominator vanishes.
  if (n < 3 || k < 1 || k > n)
    throw std::invalid_argument("knn_bound_exact: need 1 <= k <= n, n >= 3");
  KnnBoundValues v;
  if (2 * n - k - 3 > 0) {
    Rat cap = Rat(2 * n, k) + Rat(2 * (k + 1)) / Rat(k * (2 * n - k - 3));
    cap.canonicalize();
    v.cap = cap;
  }
  Rat num(0), den(0);
  int hi = std::min(n, 2 * k);
  for (int i = k; i <= hi; ++i) {
    TwoValueIntegrals tv = knn_constants(n, i);
    Rat c = Rat(binomial(i, k));
    num += c * tv.off_cycle;
    den += c * (tv.on_cycle - tv.off_cycle);
  }
  v.improved = Rat(1) + Rat(n, 2) * num / den;
  v.improved.canonicalize();
  return v;
}

inline BoundReport knn_bound(int n, int k) {
  KnnBoundValues v = knn_bound_exact(n, k);
  BoundReport rep;
  rep.method = "improved-knn";
  rep.graph = "knn";
  rep.n = n;
  rep.k = k;
  rep.exact = v.improved;
  rep.bound = to_double(v.improved);
  if (v.cap) {
    rep.companion = to_double(*v.cap);
    rep.companion_label = "cap";
  }
  return rep;
}

// Improvement-ratio data (reported, never asserted: the comparison is a
// conjecture supported by computation, not a theorem).
struct ImprovementRatio {
  double lhs = 0.0;  // improved bound / plain bound
  double rhs = 0.0;  // 1 + (1 - 2k/n) log((k+2)/(k+3))
  bool conjecture_holds = false;
};

inline ImprovementRatio improvement_ratio(int n, int k) {
  KnBoundValues v = kn_bound_exact(n, k);
  ImprovementRatio r;
  r.lhs = to_double(v.improved / v.veomett);
  r.rhs = 1.0 + (1.0 - 2.0 * k / n) *
                    std::log((k + 2.0) / (k + 3.0));
  r.conjecture_holds = r.lhs <= r.rhs + 1e-12;
  return r;
}

}  // namespace bvl
