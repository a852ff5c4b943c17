#pragma once

// Dense symmetric linear algebra and a small standard-form semidefinite
// programming solver:
//
//   primal:  min <C,X>  s.t.  <A_i,X> = b_i,  X >= 0
//   dual:    max b'y    s.t.  C - sum_i y_i A_i = S >= 0
//
// The eigensolver is Householder tridiagonalization followed by implicit-
// shift QL (EISPACK tred2/tql2 lineage): deterministic and dependency-free.
// The SDP solver is an infeasible-start primal-dual interior-point method
// with Nesterov-Todd scaling and adaptive centering.  All programs in this
// library are small (dim at most a few hundred, few constraints), so dense
// O(n^3) steps are perfectly adequate.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bvl {

// ---------------------------------------------------------------------------
// SymMatrix: dense symmetric matrix, packed lower triangle.
// ---------------------------------------------------------------------------
struct SymMatrix {
  int dim = 0;
  std::vector<double> tri;  // row-major lower triangle, size dim*(dim+1)/2

  SymMatrix() = default;
  explicit SymMatrix(int d) : dim(d), tri(static_cast<size_t>(d) * (d + 1) / 2, 0.0) {
    if (d < 1) throw std::invalid_argument("SymMatrix: dim must be >= 1");
  }

  static SymMatrix identity(int d) {
    SymMatrix m(d);
    for (int i = 0; i < d; ++i) m.at(i, i) = 1.0;
    return m;
  }

  double& at(int i, int j) {
    if (i < j) std::swap(i, j);
    return tri[static_cast<size_t>(i) * (i + 1) / 2 + j];
  }
  double operator()(int i, int j) const {
    if (i < j) std::swap(i, j);
    return tri[static_cast<size_t>(i) * (i + 1) / 2 + j];
  }

  double frobenius_norm() const {
    double s = 0;
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j <= i; ++j) {
        double v = (*this)(i, j);
        s += (i == j ? 1.0 : 2.0) * v * v;
      }
    return std::sqrt(s);
  }

  double trace() const {
    double s = 0;
    for (int i = 0; i < dim; ++i) s += (*this)(i, i);
    return s;
  }

  bool finite() const {
    for (double v : tri)
      if (!std::isfinite(v)) return false;
    return true;
  }
};

// Frobenius inner product <A,B> = trace(AB).
inline double sym_inner(const SymMatrix& a, const SymMatrix& b) {
  if (a.dim != b.dim) throw std::invalid_argument("sym_inner: dimension mismatch");
  double s = 0;
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j <= i; ++j) s += (i == j ? 1.0 : 2.0) * a(i, j) * b(i, j);
  return s;
}

namespace detail {

// Minimal dense matrix used internally by the eigensolver and the IPM.
struct Dense {
  int n = 0;
  std::vector<double> a;  // row-major

  Dense() = default;
  explicit Dense(int n_) : n(n_), a(static_cast<size_t>(n_) * n_, 0.0) {}

  double& operator()(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  double operator()(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }

  static Dense identity(int n) {
    Dense d(n);
    for (int i = 0; i < n; ++i) d(i, i) = 1.0;
    return d;
  }
};

inline Dense to_dense(const SymMatrix& m) {
  Dense d(m.dim);
  for (int i = 0; i < m.dim; ++i)
    for (int j = 0; j < m.dim; ++j) d(i, j) = m(i, j);
  return d;
}

inline SymMatrix to_sym(const Dense& d) {
  SymMatrix m(d.n);
  for (int i = 0; i < d.n; ++i)
    for (int j = 0; j <= i; ++j) m.at(i, j) = 0.5 * (d(i, j) + d(j, i));
  return m;
}

inline Dense mul(const Dense& x, const Dense& y) {
  Dense r(x.n);
  for (int i = 0; i < x.n; ++i)
    for (int k = 0; k < x.n; ++k) {
      double v = x(i, k);
      if (v == 0.0) continue;
      for (int j = 0; j < x.n; ++j) r(i, j) += v * y(k, j);
    }
  return r;
}

// Householder reduction of a (full, symmetric) matrix to tridiagonal form
// with accumulation of the orthogonal transformation in z.
inline void tred2(Dense& z, std::vector<double>& d, std::vector<double>& e) {
  const int n = z.n;
  d.assign(n, 0.0);
  e.assign(n, 0.0);
  for (int i = n - 1; i > 0; --i) {
    int l = i - 1;
    double h = 0.0, scale = 0.0;
    if (l > 0) {
      for (int k = 0; k <= l; ++k) scale += std::fabs(z(i, k));
      if (scale == 0.0) {
        e[i] = z(i, l);
      } else {
        for (int k = 0; k <= l; ++k) {
          z(i, k) /= scale;
          h += z(i, k) * z(i, k);
        }
        double f = z(i, l);
        double g = (f >= 0.0 ? -std::sqrt(h) : std::sqrt(h));
        e[i] = scale * g;
        h -= f * g;
        z(i, l) = f - g;
        f = 0.0;
        for (int j = 0; j <= l; ++j) {
          z(j, i) = z(i, j) / h;
          g = 0.0;
          for (int k = 0; k <= j; ++k) g += z(j, k) * z(i, k);
          for (int k = j + 1; k <= l; ++k) g += z(k, j) * z(i, k);
          e[j] = g / h;
          f += e[j] * z(i, j);
        }
        double hh = f / (h + h);
        for (int j = 0; j <= l; ++j) {
          f = z(i, j);
          e[j] = g = e[j] - hh * f;
          for (int k = 0; k <= j; ++k) z(j, k) -= f * e[k] + g * z(i, k);
        }
      }
    } else {
      e[i] = z(i, l);
    }
    d[i] = h;
  }
  d[0] = 0.0;
  e[0] = 0.0;
  for (int i = 0; i < n; ++i) {
    int l = i - 1;
    if (d[i] != 0.0) {
      for (int j = 0; j <= l; ++j) {
        double g = 0.0;
        for (int k = 0; k <= l; ++k) g += z(i, k) * z(k, j);
        for (int k = 0; k <= l; ++k) z(k, j) -= g * z(k, i);
      }
    }
    d[i] = z(i, i);
    z(i, i) = 1.0;
    for (int j = 0; j <= l; ++j) z(j, i) = z(i, j) = 0.0;
  }
}

// Implicit-shift QL on a tridiagonal matrix; z accumulates eigenvectors.
inline void tql2(std::vector<double>& d, std::vector<double>& e, Dense& z) {
  const int n = z.n;
  for (int i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
        if (std::fabs(e[m]) <= std::numeric_limits<double>::epsilon() * dd) break;
      }
      if (m != l) {
        if (++iter == 50) throw std::runtime_error("sym_eig: QL failed to converge");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + (g >= 0.0 ? std::fabs(r) : -std::fabs(r)));
        double s = 1.0, c = 1.0, p = 0.0;
        bool underflow = false;
        for (int i = m - 1; i >= l; --i) {
          double f = s * e[i];
          double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            underflow = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          for (int k = 0; k < n; ++k) {
            f = z(k, i + 1);
            z(k, i + 1) = s * z(k, i) + c * f;
            z(k, i) = c * z(k, i) - s * f;
          }
        }
        if (underflow) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// sym_eig: eigenvalues (descending) and orthonormal eigenvectors (columns).
// ---------------------------------------------------------------------------
struct EigResult {
  std::vector<double> values;               // descending
  std::vector<std::vector<double>> vectors; // vectors[k] pairs with values[k]
};

inline EigResult sym_eig(const SymMatrix& m) {
  if (!m.finite()) throw std::invalid_argument("sym_eig: non-finite entries");
  const int n = m.dim;
  detail::Dense z = detail::to_dense(m);
  std::vector<double> d, e;
  detail::tred2(z, d, e);
  detail::tql2(d, e, z);
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return d[a] > d[b]; });
  EigResult r;
  r.values.resize(n);
  r.vectors.assign(n, std::vector<double>(n));
  for (int k = 0; k < n; ++k) {
    r.values[k] = d[idx[k]];
    for (int i = 0; i < n; ++i) r.vectors[k][i] = z(i, idx[k]);
  }
  return r;
}

inline double min_eigenvalue(const SymMatrix& m) { return sym_eig(m).values.back(); }

// Uniform PSD acceptance rule used by the membership tests downstream.
inline bool is_psd(const SymMatrix& m, double tol_scale = 1e-8) {
  return min_eigenvalue(m) >= -tol_scale * (1.0 + m.frobenius_norm());
}

// ---------------------------------------------------------------------------
// Standard-form SDP.
// ---------------------------------------------------------------------------
struct SdpProblem {
  SymMatrix objective;                                  // C
  std::vector<std::pair<SymMatrix, double>> constraints;  // (A_i, b_i)
  int dim = 0;
};

enum class SdpStatus { Optimal, Infeasible, Unbounded, MaxIter };

inline const char* to_string(SdpStatus s) {
  switch (s) {
    case SdpStatus::Optimal: return "optimal";
    case SdpStatus::Infeasible: return "infeasible";
    case SdpStatus::Unbounded: return "unbounded";
    default: return "max-iterations";
  }
}

struct SdpSolution {
  SymMatrix X;            // primal matrix
  std::vector<double> y;  // dual multipliers
  SdpStatus status = SdpStatus::MaxIter;
  double gap = std::numeric_limits<double>::infinity();
  double value = std::numeric_limits<double>::quiet_NaN();  // <C,X>
  double dual_value = std::numeric_limits<double>::quiet_NaN();
  int iterations = 0;
};

namespace detail {

// Cholesky factorization (lower); returns false if not positive definite.
inline bool cholesky(const Dense& a, Dense& l) {
  const int n = a.n;
  l = Dense(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) {
      double s = a(i, j);
      for (int k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
      if (i == j) {
        if (s <= 0.0 || !std::isfinite(s)) return false;
        l(i, i) = std::sqrt(s);
      } else {
        l(i, j) = s / l(j, j);
      }
    }
  }
  return true;
}

inline std::vector<double> chol_solve(const Dense& l, std::vector<double> b) {
  const int n = l.n;
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < i; ++k) b[i] -= l(i, k) * b[k];
    b[i] /= l(i, i);
  }
  for (int i = n - 1; i >= 0; --i) {
    for (int k = i + 1; k < n; ++k) b[i] -= l(k, i) * b[k];
    b[i] /= l(i, i);
  }
  return b;
}

// Symmetric functional calculus: f applied to the spectrum of m.
template <typename F>
inline Dense sym_apply(const SymMatrix& m, F&& f) {
  EigResult eg = sym_eig(m);
  const int n = m.dim;
  Dense r(n);
  for (int k = 0; k < n; ++k) {
    double fv = f(eg.values[k]);
    for (int i = 0; i < n; ++i) {
      double vi = eg.vectors[k][i] * fv;
      if (vi == 0.0) continue;
      for (int j = 0; j < n; ++j) r(i, j) += vi * eg.vectors[k][j];
    }
  }
  return r;
}

// Largest step alpha in [0, cap] with M + alpha*D >= 0, via the smallest
// eigenvalue of L^{-1} D L^{-T} where M = L L'.
inline double psd_step_length(const Dense& lfac, const SymMatrix& d, double cap) {
  const int n = lfac.n;
  // Solve L V = D (columns), then L W' = V' -> W = L^{-1} D L^{-T}.
  Dense v(n);
  for (int c = 0; c < n; ++c) {
    std::vector<double> col(n);
    for (int i = 0; i < n; ++i) col[i] = d(i, c);
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < i; ++k) col[i] -= lfac(i, k) * col[k];
      col[i] /= lfac(i, i);
    }
    for (int i = 0; i < n; ++i) v(i, c) = col[i];
  }
  Dense w(n);
  for (int r = 0; r < n; ++r) {
    std::vector<double> row(n);
    for (int j = 0; j < n; ++j) row[j] = v(r, j);
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < j; ++k) row[j] -= lfac(j, k) * row[k];
      row[j] /= lfac(j, j);
    }
    for (int j = 0; j < n; ++j) w(r, j) = row[j];
  }
  double lam = min_eigenvalue(to_sym(w));
  if (lam >= 0.0) return cap;
  return std::min(cap, -1.0 / lam);
}

}  // namespace detail

namespace detail {
inline SdpSolution solve_sdp_impl(const SdpProblem& prob, double tol, int max_iter);
}  // namespace detail

// Infeasible-start primal-dual interior-point method with NT scaling.
// Constraints are normalized to unit Frobenius norm first (a pure rescaling
// of the multipliers, undone on return) to even out the Schur system.
inline SdpSolution solve_sdp(const SdpProblem& prob, double tol = 1e-8,
                             int max_iter = 200) {
  SdpProblem scaled = prob;
  std::vector<double> norms(prob.constraints.size(), 1.0);
  for (size_t i = 0; i < scaled.constraints.size(); ++i) {
    double nf = scaled.constraints[i].first.frobenius_norm();
    if (nf > 0.0 && std::isfinite(nf)) {
      norms[i] = nf;
      for (auto& v : scaled.constraints[i].first.tri) v /= nf;
      scaled.constraints[i].second /= nf;
    }
  }
  SdpSolution sol = detail::solve_sdp_impl(scaled, tol, max_iter);
  for (size_t i = 0; i < sol.y.size(); ++i) sol.y[i] /= norms[i];
  return sol;
}

namespace detail {

inline SdpSolution solve_sdp_impl(const SdpProblem& prob, double tol,
                                  int max_iter) {
  using detail::Dense;
  const int n = prob.dim;
  const int m = static_cast<int>(prob.constraints.size());
  if (m == 0) throw std::invalid_argument("solve_sdp: constraint list empty");
  if (prob.objective.dim != n) throw std::invalid_argument("solve_sdp: objective dim mismatch");
  for (const auto& [a, b] : prob.constraints) {
    (void)b;
    if (a.dim != n) throw std::invalid_argument("solve_sdp: constraint dim mismatch");
    if (!a.finite()) throw std::invalid_argument("solve_sdp: non-finite constraint");
  }
  if (!prob.objective.finite()) throw std::invalid_argument("solve_sdp: non-finite objective");

  // Constraint independence check: Cholesky of the Gram matrix with a
  // relative rank threshold.  The generated programs are full-rank by
  // construction, so degeneracy indicates a builder bug.
  {
    Dense gram(m);
    double gmax = 0.0;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j <= i; ++j) {
        double v = sym_inner(prob.constraints[i].first, prob.constraints[j].first);
        gram(i, j) = gram(j, i) = v;
        if (i == j) gmax = std::max(gmax, v);
      }
    Dense l(m);
    bool ok = true;
    for (int i = 0; i < m && ok; ++i)
      for (int j = 0; j <= i && ok; ++j) {
        double s = gram(i, j);
        for (int k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
        if (i == j) {
          if (s <= 1e-12 * gmax) ok = false;
          else l(i, i) = std::sqrt(s);
        } else {
          l(i, j) = s / l(j, j);
        }
      }
    if (!ok) throw std::invalid_argument("solve_sdp: linearly dependent constraints");
  }

  std::vector<double> b(m);
  for (int i = 0; i < m; ++i) b[i] = prob.constraints[i].second;
  double bnorm = 1.0, cnorm = 1.0 + prob.objective.frobenius_norm();
  for (double v : b) bnorm += std::fabs(v);

  SymMatrix X = SymMatrix::identity(n);
  SymMatrix S = SymMatrix::identity(n);
  std::vector<double> y(m, 0.0);

  SdpSolution sol;
  for (int iter = 0; iter < max_iter; ++iter) {
    sol.iterations = iter;
    // Residuals.
    std::vector<double> rp(m);
    double rpnorm = 0.0;
    for (int i = 0; i < m; ++i) {
      rp[i] = b[i] - sym_inner(prob.constraints[i].first, X);
      rpnorm += std::fabs(rp[i]);
    }
    SymMatrix Rd = prob.objective;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j <= i; ++j) {
        double v = Rd(i, j) - S(i, j);
        for (int c = 0; c < m; ++c) v -= y[c] * prob.constraints[c].first(i, j);
        Rd.at(i, j) = v;
      }
    double mu = sym_inner(X, S) / n;
    double pobj = sym_inner(prob.objective, X);
    double dobj = 0.0;
    for (int i = 0; i < m; ++i) dobj += b[i] * y[i];
    double gap = std::fabs(pobj - dobj) / (1.0 + std::fabs(pobj) + std::fabs(dobj));

    if (gap <= tol && rpnorm / bnorm <= tol && Rd.frobenius_norm() / cnorm <= tol) {
      sol.X = X;
      sol.y = y;
      sol.status = SdpStatus::Optimal;
      sol.gap = pobj - dobj;
      sol.value = pobj;
      sol.dual_value = dobj;
      return sol;
    }
    // Crude divergence certificates.
    if (X.frobenius_norm() > 1e14 || !X.finite()) {
      sol.status = SdpStatus::Unbounded;
      break;
    }
    double ynorm = 0.0;
    for (double v : y) ynorm = std::max(ynorm, std::fabs(v));
    if (ynorm > 1e14 || S.frobenius_norm() > 1e14) {
      sol.status = SdpStatus::Infeasible;
      break;
    }

    // Nesterov-Todd scaling point W: W S W = X.
    Dense xh = detail::sym_apply(X, [](double t) { return std::sqrt(std::max(t, 1e-300)); });
    Dense sxd = detail::to_dense(S);
    SymMatrix t = detail::to_sym(detail::mul(detail::mul(xh, sxd), xh));
    Dense tmh = detail::sym_apply(t, [](double v) { return 1.0 / std::sqrt(std::max(v, 1e-300)); });
    Dense wd = detail::mul(detail::mul(xh, tmh), xh);
    SymMatrix W = detail::to_sym(wd);

    Dense sinv = detail::sym_apply(S, [](double v) { return 1.0 / std::max(v, 1e-300); });

    // Schur complement M_ij = <A_i, W A_j W> and its factorization.
    std::vector<SymMatrix> waw(m, SymMatrix(n));
    for (int c = 0; c < m; ++c)
      waw[c] = detail::to_sym(detail::mul(detail::mul(wd, detail::to_dense(prob.constraints[c].first)), wd));
    Dense schur(m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j <= i; ++j)
        schur(i, j) = schur(j, i) = sym_inner(prob.constraints[i].first, waw[j]);
    Dense lschur;
    if (!detail::cholesky(schur, lschur)) {
      // Near-singular scaling; add a tiny diagonal regularization.
      double reg = 1e-13 * (1.0 + schur(0, 0));
      for (int i = 0; i < m; ++i) schur(i, i) += reg;
      if (!detail::cholesky(schur, lschur)) {
        sol.status = SdpStatus::MaxIter;
        break;
      }
    }

    Dense lx, ls;
    if (!detail::cholesky(detail::to_dense(X), lx) || !detail::cholesky(detail::to_dense(S), ls)) {
      sol.status = SdpStatus::MaxIter;
      break;
    }

    // Direction for a given centering parameter sigma.
    auto direction = [&](double sigma, SymMatrix& dX, SymMatrix& dS, std::vector<double>& dy) {
      // target = sigma*mu*S^{-1} - X
      SymMatrix target(n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) target.at(i, j) = sigma * mu * sinv(i, j) - X(i, j);
      SymMatrix wrdw = detail::to_sym(detail::mul(detail::mul(wd, detail::to_dense(Rd)), wd));
      std::vector<double> rhs(m);
      for (int i = 0; i < m; ++i)
        rhs[i] = sym_inner(prob.constraints[i].first, wrdw) -
                 sym_inner(prob.constraints[i].first, target) + rp[i];
      dy = detail::chol_solve(lschur, rhs);
      dS = Rd;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) {
          double v = dS(i, j);
          for (int c = 0; c < m; ++c) v -= dy[c] * prob.constraints[c].first(i, j);
          dS.at(i, j) = v;
        }
      SymMatrix wdsw = detail::to_sym(detail::mul(detail::mul(wd, detail::to_dense(dS)), wd));
      dX = SymMatrix(n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) dX.at(i, j) = target(i, j) - wdsw(i, j);
    };

    // Predictor (affine-scaling) step to choose sigma.
    SymMatrix dX(n), dS(n);
    std::vector<double> dy;
    direction(0.0, dX, dS, dy);
    double ap = detail::psd_step_length(lx, dX, 1.0);
    double ad = detail::psd_step_length(ls, dS, 1.0);
    double mu_aff = 0.0;
    {
      SymMatrix xa = X, sa = S;
      for (size_t i = 0; i < X.tri.size(); ++i) {
        xa.tri[i] += ap * dX.tri[i];
        sa.tri[i] += ad * dS.tri[i];
      }
      mu_aff = sym_inner(xa, sa) / n;
    }
    double sigma = std::pow(std::max(mu_aff, 0.0) / mu, 3.0);
    sigma = std::min(std::max(sigma, 1e-6), 0.99);
    // While infeasible, keep a centering floor so complementarity cannot
    // collapse faster than the residuals (otherwise the iterates get pinned
    // to the cone boundary with vanishing steps).
    double relinf = std::max(rpnorm / bnorm, Rd.frobenius_norm() / cnorm);
    if (relinf > 10.0 * tol) sigma = std::max(sigma, 0.5);

    // Corrector step.
    direction(sigma, dX, dS, dy);
    ap = 0.98 * detail::psd_step_length(lx, dX, 1.0 / 0.98);
    ad = 0.98 * detail::psd_step_length(ls, dS, 1.0 / 0.98);
    ap = std::min(ap, 1.0);
    ad = std::min(ad, 1.0);

    for (size_t i = 0; i < X.tri.size(); ++i) {
      X.tri[i] += ap * dX.tri[i];
      S.tri[i] += ad * dS.tri[i];
    }
    for (int i = 0; i < m; ++i) y[i] += ad * dy[i];
  }

  sol.X = X;
  sol.y = y;
  double pobj = sym_inner(prob.objective, X);
  double dobj = 0.0;
  for (int i = 0; i < m; ++i) dobj += b[i] * y[i];
  sol.gap = pobj - dobj;
  sol.value = pobj;
  sol.dual_value = dobj;
  if (sol.status != SdpStatus::Infeasible && sol.status != SdpStatus::Unbounded)
    sol.status = SdpStatus::MaxIter;
  return sol;
}

}  // namespace detail

}  // namespace bvl
