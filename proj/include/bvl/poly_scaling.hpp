#pragma once

// Upper bounds on the scaling constants of the spectrahedral approximations
// for cones of nonnegative 2d-forms in n variables:
//
//  * invariant_sdp_bound    — the symmetry-reduced SDP (PSD test against
//                             rotation-invariant squares only);
//  * full_sdp_bound         — invariant objective, squares ranging over all
//                             forms of degree 2k (exact value, desk scale);
//  * legendre_bound_fixed   — 1 - min of the fixed zonal partial sum;
//  * legendre_bound_optimized — sup over the free tail coefficients via a
//                             univariate nonnegativity SDP;
//  * closed_form_bound      — the Bessel/Legendre-root closed form;
//  * zonal_partial_sum_profile — figure data for the partial-sum heuristic.

#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bvl/bound_report.hpp"
#include "bvl/harmonics.hpp"
#include "bvl/numerics.hpp"
#include "bvl/polynomial.hpp"
#include "bvl/rational.hpp"
#include "bvl/sphere_moments.hpp"

namespace bvl {

// Coefficients (a_0..a_d) of the invariant form sum_j a_j Z_{2j} s^{d-j};
// normalized combos have a_0 = 1.
struct ZonalCombo {
  int n = 0;
  int d = 0;
  std::vector<double> a;
};

// ---------------------------------------------------------------------------
// Sturm-sequence machinery for exact univariate minimization.
// ---------------------------------------------------------------------------
namespace detail {

inline int rat_sign(const Rat& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

inline std::vector<UniPoly> sturm_chain(const UniPoly& f) {
  std::vector<UniPoly> chain;
  chain.push_back(f);
  chain.push_back(f.derivative());
  auto normalize = [](UniPoly p) {
    // Divide by |leading| (positive scalar, sign-preserving) to keep
    // coefficients small along the remainder sequence.
    if (!p.is_zero()) {
      Rat lead = p.coefficients.back();
      p = p * (Rat(1) / abs(lead));
    }
    return p;
  };
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    UniPoly r = uni_rem(chain[chain.size() - 2], chain.back());
    if (r.is_zero()) break;
    chain.push_back(normalize(r * Rat(-1)));
  }
  return chain;
}

inline int sign_variations(const std::vector<UniPoly>& chain, const Rat& x) {
  int prev = 0, var = 0;
  for (const UniPoly& p : chain) {
    int s = rat_sign(p.eval(x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

// Synthetic division by (x - r); caller guarantees f(r) = 0.
inline UniPoly deflate(const UniPoly& f, const Rat& r) {
  int deg = f.degree();
  std::vector<Rat> q(deg, Rat(0));
  Rat carry = f.coefficients[deg];
  for (int i = deg - 1; i >= 0; --i) {
    q[i] = carry;
    carry = f.coefficients[i] + carry * r;
  }
  return UniPoly(std::move(q));
}

}  // namespace detail

// Distinct real roots of f in [lo, hi], isolated by Sturm bisection to width
// 1e-12 and returned ascending.
inline std::vector<double> isolate_real_roots(UniPoly f, Rat lo, Rat hi) {
  std::vector<double> roots;
  if (f.is_zero()) throw std::invalid_argument("isolate_real_roots: zero polynomial");
  while (!f.is_zero() && f.degree() >= 1 && f.eval(lo) == 0) {
    roots.push_back(to_double(lo));
    f = detail::deflate(f, lo);
  }
  while (!f.is_zero() && f.degree() >= 1 && f.eval(hi) == 0) {
    roots.push_back(to_double(hi));
    f = detail::deflate(f, hi);
  }
  if (f.degree() >= 1) {
    auto chain = detail::sturm_chain(f);
    const Rat width_target = Rat(1, Int("1000000000000"));  // 1e-12
    // Work queue of half-open intervals (a, b] with the root count V(a)-V(b).
    struct Iv { Rat a, b; int count; };
    std::vector<Iv> queue;
    int total = detail::sign_variations(chain, lo) - detail::sign_variations(chain, hi);
    if (total > 0) queue.push_back({lo, hi, total});
    while (!queue.empty()) {
      Iv iv = queue.back();
      queue.pop_back();
      if (iv.count == 1 && iv.b - iv.a <= width_target) {
        roots.push_back(to_double((iv.a + iv.b) / 2));
        continue;
      }
      Rat mid = (iv.a + iv.b) / 2;
      while (f.eval(mid) == 0 && iv.count > 1) {
        // A root exactly at the midpoint: perturb the split point.
        mid = (iv.a + mid) / 2;
      }
      if (f.eval(mid) == 0) {
        roots.push_back(to_double(mid));
        continue;
      }
      int left = detail::sign_variations(chain, iv.a) - detail::sign_variations(chain, mid);
      int right = iv.count - left;
      if (left > 0) queue.push_back({iv.a, mid, left});
      if (right > 0) queue.push_back({mid, iv.b, right});
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

// Global minimum of f over [-1,1]: exact isolation of the derivative's roots
// plus endpoint evaluation.  Returns (min value, argmin).
inline std::pair<double, double> minimize_on_interval(const UniPoly& f) {
  std::vector<double> candidates = {-1.0, 1.0};
  UniPoly df = f.derivative();
  if (!df.is_zero() && df.degree() >= 1) {
    auto crit = isolate_real_roots(df, Rat(-1), Rat(1));
    candidates.insert(candidates.end(), crit.begin(), crit.end());
  }
  double best = std::numeric_limits<double>::infinity(), arg = -1.0;
  for (double t : candidates) {
    double v = f.eval(t);
    if (v < best) {
      best = v;
      arg = t;
    }
  }
  return {best, arg};
}

// ---------------------------------------------------------------------------
// Reduced (invariant) SDP bound.
// ---------------------------------------------------------------------------
namespace detail {

// Dyadic scale factors 2^e chosen so the scaled diagonal is O(1); dyadics
// keep the congruence exact in rational arithmetic.
inline std::vector<Rat> dyadic_scales(const std::vector<Rat>& diag) {
  std::vector<Rat> s(diag.size(), Rat(1));
  for (size_t i = 0; i < diag.size(); ++i) {
    if (diag[i] <= 0) continue;
    int e = static_cast<int>(std::lround(-0.5 * std::log2(to_double(diag[i]))));
    s[i] = e >= 0 ? rat_pow(Rat(2), e) : Rat(1) / rat_pow(Rat(2), -e);
  }
  return s;
}

// Solve the LMI program  min sum_j a_j h_j  s.t.  sum_j a_j B_j >= 0, a_0 = 1
// (exact rational data B_j, weights h_j) through the standard-form solver.
// Returns (optimum, certificate a, status) where bound = 1 - optimum.
struct LmiResult {
  double optimum = std::numeric_limits<double>::quiet_NaN();
  std::vector<double> a;
  SdpStatus status = SdpStatus::MaxIter;
};

inline LmiResult solve_normalized_lmi(const std::vector<std::vector<std::vector<Rat>>>& blocks,
                                      const std::vector<Rat>& weights) {
  const int d1 = static_cast<int>(blocks.size());  // d+1 coefficients
  const int sz = static_cast<int>(blocks[0].size());

  // Exact dyadic conditioning of the shared basis.
  std::vector<Rat> diag(sz);
  for (int i = 0; i < sz; ++i) diag[i] = blocks[0][i][i];
  std::vector<Rat> scale = dyadic_scales(diag);

  auto to_matrix = [&](const std::vector<std::vector<Rat>>& b) {
    SymMatrix m(sz);
    for (int i = 0; i < sz; ++i)
      for (int j = 0; j <= i; ++j) m.at(i, j) = to_double(b[i][j] * scale[i] * scale[j]);
    return m;
  };

  SdpProblem prob;
  prob.dim = sz;
  prob.objective = to_matrix(blocks[0]);
  for (int j = 1; j < d1; ++j)
    prob.constraints.emplace_back(to_matrix(blocks[j]) , 0.0);
  // Standard dual form: max b'y s.t. C - sum y_j A_j >= 0 with A_j = -B_j,
  // b_j = -h_j; then program optimum = h_0 + sum h_j y_j = h_0 - b'y.
  for (int j = 1; j < d1; ++j) {
    auto& [a, b] = prob.constraints[j - 1];
    for (auto& v : a.tri) v = -v;
    b = -to_double(weights[j]);
  }

  SdpSolution sol = solve_sdp(prob);
  LmiResult res;
  res.status = sol.status;
  res.a.assign(d1, 0.0);
  res.a[0] = 1.0;
  for (int j = 1; j < d1; ++j) res.a[j] = sol.y[j - 1];
  res.optimum = to_double(weights[0]) - sol.dual_value;
  return res;
}

}  // namespace detail

// Exact rational constraint blocks of the reduced program.  The quadratic
// module is expressed over the orthogonal basis q_0..q_k for the marginal
// weight (an exact rational congruence of the monomial-basis Hankel form):
// the level-0 block comes out diagonal and the assembled data is well
// conditioned, where the raw Hankel matrices are Hilbert-like and defeat
// floating-point solvers by k ~ 6.  PSD-ness, and hence the program value,
// is invariant under the congruence.
inline std::vector<std::vector<std::vector<Rat>>> invariant_sdp_blocks(int n, int d, int k) {
  // Basis q_0..q_k spanning the even polynomials of degree <= 2k (the span
  // of t^0, t^2, ..., t^{2k} indexing the original Hankel form).
  std::vector<Rat> mom = marginal_moments(n, 4 * k + 2 * d + 2);
  std::vector<UniPoly> q(k + 1);
  for (int i = 0; i <= k; ++i) q[i] = zonal_profile(n, 2 * i);
  std::vector<std::vector<std::vector<Rat>>> blocks(d + 1);
  for (int j = 0; j <= d; ++j) {
    UniPoly p = zonal_profile(n, 2 * j);
    Rat hj = Rat(harmonic_dim(n, 2 * j));
    blocks[j].assign(k + 1, std::vector<Rat>(k + 1));
    for (int i = 0; i <= k; ++i) {
      UniPoly qip = q[i] * p;
      for (int i2 = i; i2 <= k; ++i2) {
        Rat v = hj * detail::weighted_inner(qip, q[i2], mom);
        blocks[j][i][i2] = v;
        blocks[j][i2][i] = v;
      }
    }
  }
  std::vector<Rat> diag(k + 1);
  for (int i = 0; i <= k; ++i) diag[i] = blocks[0][i][i];
  std::vector<Rat> scale = detail::dyadic_scales(diag);
  for (auto& b : blocks)
    for (int i = 0; i <= k; ++i)
      for (int j2 = 0; j2 <= k; ++j2) b[i][j2] *= scale[i] * scale[j2];
  return blocks;
}

// The symmetry-reduced SDP of the numerical-bounds table: a (k+1)x(k+1) PSD
// constraint M(a)_{i,i'} = sum_j a_j h_{2j} int P_{2j,n}(t) t^{2(i+i')} w_n dt
// (assembled over the orthogonal marginal basis, an exact congruence) with
// objective min sum_j a_j h_{2j}, a_0 = 1; bound = 1 - optimum.  This relaxes
// the exact program (PSD only against invariant squares), so it is an upper
// bound on the scaling constant.
inline BoundReport invariant_sdp_bound(int n, int d, int k) {
  if (!(k >= d && d >= 1 && n >= 3))
    throw std::invalid_argument("invariant_sdp_bound: need k >= d >= 1, n >= 3");
  std::vector<Rat> h(d + 1);
  for (int j = 0; j <= d; ++j) h[j] = harmonic_dim(n, 2 * j);
  detail::LmiResult lmi =
      detail::solve_normalized_lmi(invariant_sdp_blocks(n, d, k), h);
  BoundReport rep;
  rep.method = "reduced-sdp";
  rep.n = n;
  rep.d = d;
  rep.k = k;
  rep.bound = 1.0 - lmi.optimum;
  rep.zonal_certificate = lmi.a;
  rep.solver_status = to_string(lmi.status);
  rep.verified = (lmi.status == SdpStatus::Optimal);
  return rep;
}

// Exact-symmetric SDP: lambda invariant, squares ranging over all of F_k.
// PSD constraint sum_j a_j h_{2j} B_j >= 0 with
// (B_j)_{b1,b2} = int P_{2j,n}(u_1) u^{b1+b2} dmu, expanded monomially.
inline BoundReport full_sdp_bound(int n, int d, int k) {
  if (!(k >= d && d >= 1)) throw std::invalid_argument("full_sdp_bound: need k >= d >= 1");
  auto basis = basis_multiindices(n, 2 * k);
  const int sz = static_cast<int>(basis.size());
  if (sz > 500)
    throw std::invalid_argument("full_sdp_bound: basis size " + std::to_string(sz) +
                                " exceeds the desk-scale guard of 500");
  std::vector<Rat> h(d + 1);
  for (int j = 0; j <= d; ++j) h[j] = harmonic_dim(n, 2 * j);

  std::vector<std::vector<std::vector<Rat>>> blocks(d + 1);
  for (int j = 0; j <= d; ++j) {
    UniPoly p = zonal_profile(n, 2 * j);
    blocks[j].assign(sz, std::vector<Rat>(sz, Rat(0)));
    for (int i = 0; i < sz; ++i)
      for (int i2 = i; i2 < sz; ++i2) {
        MultiIndex bb = basis[i] + basis[i2];
        Rat v(0);
        for (int c = 0; c <= p.degree(); ++c) {
          if (p.coeff(c) == 0) continue;
          MultiIndex g = bb;
          g.exponents[0] += c;
          v += p.coeff(c) * monomial_sphere_integral(g);
        }
        v *= h[j];
        blocks[j][i][i2] = v;
        blocks[j][i2][i] = v;
      }
  }

  detail::LmiResult lmi = detail::solve_normalized_lmi(blocks, h);
  BoundReport rep;
  rep.method = "full-sdp";
  rep.n = n;
  rep.d = d;
  rep.k = k;
  rep.bound = 1.0 - lmi.optimum;
  rep.zonal_certificate = lmi.a;
  rep.solver_status = to_string(lmi.status);
  rep.verified = (lmi.status == SdpStatus::Optimal);
  return rep;
}

// ---------------------------------------------------------------------------
// Legendre-program bounds.
// ---------------------------------------------------------------------------

// Fixed tail (all free coefficients zero): q = sum_{j=0}^d h_{2j} P_{2j,n};
// bound = 1 - min_{[-1,1]} q, minimized exactly.
inline BoundReport legendre_bound_fixed(int n, int d, int k, bool classical_legendre = false) {
  if (!(k >= d && d >= 1)) throw std::invalid_argument("legendre_bound_fixed: need k >= d >= 1");
  UniPoly q;
  for (int j = 0; j <= d; ++j) {
    UniPoly p = classical_legendre ? legendre(2 * j) : zonal_profile(n, 2 * j);
    q = q + p * Rat(harmonic_dim(n, 2 * j));
  }
  auto [minval, argmin] = minimize_on_interval(q);
  BoundReport rep;
  rep.method = "legendre-fixed";
  rep.n = n;
  rep.d = d;
  rep.k = k;
  rep.bound = 1.0 - minval;
  std::vector<double> qc(q.degree() + 1);
  for (int i = 0; i <= q.degree(); ++i) qc[i] = to_double(q.coeff(i));
  rep.profile_certificate = qc;
  rep.companion = argmin;
  rep.companion_label = "argmin";
  return rep;
}

// Optimized tail: sup over b_{d+1..k} of min q via the univariate
// nonnegativity SDP  max t  s.t.  q - t = sigma0 + (1-x^2) sigma1 with
// sigma0, sigma1 even SOS of degrees <= 2k, 2k-2.  The free variables
// (t, b) are eliminated exactly through the triangular even-power
// coefficient equations, leaving a standard-form program over the PSD
// Gram blocks.
inline BoundReport legendre_bound_optimized(int n, int d, int k, bool classical_legendre = false) {
  if (!(k > d && d >= 1)) throw std::invalid_argument("legendre_bound_optimized: need k > d >= 1");

  auto profile = [&](int j) {
    return classical_legendre ? legendre(2 * j) : zonal_profile(n, 2 * j);
  };

  // Even-power coefficient data: q0 (fixed part) and T (tail profiles).
  std::vector<Rat> q0(k + 1, Rat(0));
  for (int j = 0; j <= d; ++j) {
    UniPoly p = profile(j) * Rat(harmonic_dim(n, 2 * j));
    for (int r = 0; r <= k; ++r) q0[r] += p.coeff(2 * r);
  }
  const int f = k - d;  // number of free tail coefficients
  std::vector<std::vector<Rat>> tail(k + 1, std::vector<Rat>(f, Rat(0)));
  std::vector<UniPoly> tail_profiles(f);
  for (int jj = 0; jj < f; ++jj) {
    tail_profiles[jj] = profile(d + 1 + jj);
    for (int r = 0; r <= k; ++r) tail[r][jj] = tail_profiles[jj].coeff(2 * r);
  }

  // Gram blocks for sigma0 (degree <= 2k) and sigma1 (degree <= 2k-2): even
  // polynomials are sums of squares of even plus squares of odd polynomials,
  // so each sigma contributes an even-basis block and an odd-basis block.
  // The bases are classical Legendre polynomials of the matching parity
  // (monomial bases give Hilbert-conditioned Gram data that stalls the
  // solver by k ~ 8; the basis change is a congruence and does not move the
  // optimum).
  //   block 0: L_0, L_2, ..., deg <= k      (sigma0 even part)
  //   block 1: L_1, L_3, ..., deg <= k      (sigma0 odd part)
  //   block 2: L_0, L_2, ..., deg <= k-1, weighted by (1-x^2)
  //   block 3: L_1, L_3, ..., deg <= k-1, weighted by (1-x^2)
  struct Block {
    std::vector<UniPoly> basis;
    bool weighted;  // multiplied by (1 - x^2)
    int offset = 0;
  };
  std::vector<Block> bl;
  auto make_basis = [](int maxdeg, int parity) {
    std::vector<UniPoly> v;
    for (int t = parity; t <= maxdeg; t += 2) v.push_back(legendre(t));
    return v;
  };
  bl.push_back({make_basis(k, 0), false});
  bl.push_back({make_basis(k, 1), false});
  if (k >= 1) bl.push_back({make_basis(k - 1, 0), true});
  if (k >= 2) bl.push_back({make_basis(k - 1, 1), true});
  int dim = 0;
  for (auto& b : bl) {
    b.offset = dim;
    dim += static_cast<int>(b.basis.size());
  }

  // Pairwise basis products (times the block weight), exact; E_r reads off
  // the x^{2r} coefficient so that <E_r, Q> = [x^{2r}] (sigma0 + (1-x^2)sigma1).
  const UniPoly one_minus_x2{std::vector<Rat>{Rat(1), Rat(0), Rat(-1)}};
  std::vector<std::vector<std::vector<UniPoly>>> prods;
  for (const Block& b : bl) {
    const int m = static_cast<int>(b.basis.size());
    std::vector<std::vector<UniPoly>> pp(m, std::vector<UniPoly>(m));
    for (int i = 0; i < m; ++i)
      for (int j = i; j < m; ++j) {
        UniPoly p = b.basis[i] * b.basis[j];
        if (b.weighted) p = p * one_minus_x2;
        pp[i][j] = p;
      }
    prods.push_back(std::move(pp));
  }
  auto extractor = [&](int r) {
    SymMatrix e(dim);
    for (size_t bi = 0; bi < bl.size(); ++bi) {
      const Block& b = bl[bi];
      const int m = static_cast<int>(b.basis.size());
      for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) {
          double v = to_double(prods[bi][i][j].coeff(2 * r));
          if (v != 0.0) e.at(b.offset + i, b.offset + j) = v;
        }
    }
    return e;
  };
  std::vector<SymMatrix> E;
  for (int r = 0; r <= k; ++r) E.push_back(extractor(r));

  // Eliminate (t, b) exactly.  Rows r = d+1..k determine b (the tail matrix
  // is upper triangular there with nonzero diagonal); row 0 determines t.
  // U[rr][jj] = tail[d+1+rr][jj], rr = 0..f-1 — invert by back substitution.
  std::vector<std::vector<Rat>> uinv(f, std::vector<Rat>(f, Rat(0)));
  {
    // Solve U * col = e_c for each c.
    for (int c = 0; c < f; ++c) {
      std::vector<Rat> col(f, Rat(0));
      for (int rr = f - 1; rr >= 0; --rr) {
        Rat v = (rr == c) ? Rat(1) : Rat(0);
        for (int jj = rr + 1; jj < f; ++jj) v -= tail[d + 1 + rr][jj] * col[jj];
        col[rr] = v / tail[d + 1 + rr][rr];
      }
      for (int rr = 0; rr < f; ++rr) uinv[rr][c] = col[rr];
    }
  }
  // w[r][rr] = (tail-row r) . U^{-1}[.,rr] for the retained rows r = 0..d.
  auto combo_row = [&](int r) {
    std::vector<Rat> w(f, Rat(0));
    for (int rr = 0; rr < f; ++rr) {
      Rat v(0);
      for (int jj = 0; jj < f; ++jj) v += tail[r][jj] * uinv[jj][rr];
      w[rr] = v;
    }
    return w;
  };

  SdpProblem prob;
  prob.dim = dim;
  // Constraints for r = 1..d: <E_r - sum_rr w[rr] E_{d+1+rr}, Q> = rhs.
  for (int r = 1; r <= d; ++r) {
    std::vector<Rat> w = combo_row(r);
    SymMatrix a = E[r];
    Rat rhs = q0[r];
    for (int rr = 0; rr < f; ++rr) {
      double wd = to_double(w[rr]);
      for (size_t t = 0; t < a.tri.size(); ++t) a.tri[t] -= wd * E[d + 1 + rr].tri[t];
      rhs -= w[rr] * q0[d + 1 + rr];
    }
    prob.constraints.emplace_back(a, to_double(rhs));
  }
  // Objective: t = q0_0 - sum_rr w0[rr] q0[d+1+rr] + <sum w0 E - E_0, Q>;
  // maximize t  <=>  minimize <E_0 - sum w0 E, Q>.
  std::vector<Rat> w0 = combo_row(0);
  Rat tconst = q0[0];
  prob.objective = E[0];
  for (int rr = 0; rr < f; ++rr) {
    double wd = to_double(w0[rr]);
    for (size_t t = 0; t < prob.objective.tri.size(); ++t)
      prob.objective.tri[t] -= wd * E[d + 1 + rr].tri[t];
    tconst -= w0[rr] * q0[d + 1 + rr];
  }

  SdpSolution sol = solve_sdp(prob);
  double tstar = to_double(tconst) - sol.value;

  // Recover the tail coefficients b* from Q* for the certificate.
  std::vector<double> g(f);
  for (int rr = 0; rr < f; ++rr) g[rr] = sym_inner(E[d + 1 + rr], sol.X) - to_double(q0[d + 1 + rr]);
  std::vector<double> bstar(f, 0.0);
  for (int rr = f - 1; rr >= 0; --rr) {
    double v = g[rr];
    for (int jj = rr + 1; jj < f; ++jj) v -= to_double(tail[d + 1 + rr][jj]) * bstar[jj];
    bstar[rr] = v / to_double(tail[d + 1 + rr][rr]);
  }
  UniPoly qstar;
  for (int j = 0; j <= d; ++j) qstar = qstar + profile(j) * Rat(harmonic_dim(n, 2 * j));
  for (int jj = 0; jj < f; ++jj) qstar = qstar + tail_profiles[jj] * rat_from_double(bstar[jj]);

  BoundReport rep;
  rep.method = "legendre-opt";
  rep.n = n;
  rep.d = d;
  rep.k = k;
  rep.bound = 1.0 - tstar;
  std::vector<double> qc(qstar.degree() + 1);
  for (int i = 0; i <= qstar.degree(); ++i) qc[i] = to_double(qstar.coeff(i));
  rep.profile_certificate = qc;
  rep.solver_status = to_string(sol.status);
  rep.verified = (sol.status == SdpStatus::Optimal);
  return rep;
}

// Closed form: bound = 1 + (1-gamma^2)^{-1/4} sum_{j=0}^d h_{2j} sqrt(4/(pi(4j+1)))
// with gamma the largest root of L_{2d}.  Rigorously justified for n = 3
// (the Legendre sup-norm bound is classical-Legendre specific); other n are
// labeled heuristic.
inline BoundReport closed_form_bound(int n, int d) {
  if (d < 1) throw std::invalid_argument("closed_form_bound: d must be >= 1");
  double sum = 0.0;
  for (int j = 0; j <= d; ++j)
    sum += static_cast<double>(harmonic_dim(n, 2 * j)) *
           std::sqrt(4.0 / (std::numbers::pi * (4.0 * j + 1.0)));
  auto value = [&](double gamma) {
    return 1.0 + sum / std::pow(1.0 - gamma * gamma, 0.25);
  };
  double exact_root = largest_legendre_root(2 * d);
  BoundReport rep;
  rep.method = "closed-form";
  rep.n = n;
  rep.d = d;
  rep.k = d;
  rep.bound = value(exact_root);
  rep.companion = value(gatteschi_root(d));
  rep.companion_label = "gatteschi-variant";
  rep.heuristic = (n != 3);
  return rep;
}

// Partial sums of the zonal series: profile of eta_m = sum_{j<=m} Z_{2j}
// restricted to the axis, figure data plus the exact minimizer and the
// largest zero of the derivative (the heuristic remark's conjecture is
// emitted as data, never asserted).
struct ZonalProfileData {
  std::vector<std::pair<double, double>> samples;
  double argmin = 0.0;
  double min = 0.0;
  double largest_derivative_zero = 0.0;
};

inline ZonalProfileData zonal_partial_sum_profile(int n, int m, int samples) {
  if (n < 3 || m < 0 || samples < 2)
    throw std::invalid_argument("zonal_partial_sum_profile: bad arguments");
  UniPoly q;
  for (int j = 0; j <= m; ++j)
    q = q + zonal_profile(n, 2 * j) * Rat(harmonic_dim(n, 2 * j));
  ZonalProfileData out;
  for (int i = 0; i < samples; ++i) {
    double t = -1.0 + 2.0 * i / (samples - 1);
    out.samples.emplace_back(t, q.eval(t));
  }
  auto [minval, argmin] = minimize_on_interval(q);
  out.min = minval;
  out.argmin = argmin;
  UniPoly dq = q.derivative();
  if (!dq.is_zero() && dq.degree() >= 1) {
    auto roots = isolate_real_roots(dq, Rat(-1), Rat(1));
    out.largest_derivative_zero = roots.empty() ? 0.0 : roots.back();
  }
  return out;
}

}  // namespace bvl
