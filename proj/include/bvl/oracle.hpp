#pragma once

// Independent brute-force ground truth: hamiltonian-cycle enumeration with
// exact monomial integrals over the cycle measure, construction of the
// matching certificate polynomials, the two-value membership check, and a
// deterministic sphere quadrature cross-check for the exact moment formulas.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bvl/harmonics.hpp"
#include "bvl/numerics.hpp"
#include "bvl/polynomial.hpp"
#include "bvl/rational.hpp"
#include "bvl/tsp_scaling.hpp"

namespace bvl {

// Edge monomial: (edge, exponent) pairs; the cycle measure satisfies
// x_ij^2 = x_ij, so only the support matters for integrals.
using EdgeMonomial = std::vector<std::pair<std::pair<int, int>, int>>;

// All hamiltonian cycles of the graph, each stored once as an edge bitmask.
// Vertices are 0..n-1 for K_n; for K_{n,n} the left side is 0..n-1 and the
// right side n..2n-1.
struct CycleSet {
  GraphFamily graph;
  std::vector<std::uint64_t> cycles;
  int num_edges = 0;

  int edge_index(int u, int v) const {
    if (u == v) throw std::invalid_argument("edge_index: loop");
    if (graph.kind == GraphFamily::Kind::Complete) {
      if (u > v) std::swap(u, v);
      if (u < 0 || v >= graph.n) throw std::invalid_argument("edge_index: out of range");
      return u * (2 * graph.n - u - 1) / 2 + (v - u - 1);
    }
    if (u > v) std::swap(u, v);  // left id < right id
    int n = graph.n;
    if (u < 0 || u >= n || v < n || v >= 2 * n)
      throw std::invalid_argument("edge_index: not a bipartite edge");
    return u * n + (v - n);
  }

  std::vector<std::pair<int, int>> all_edges() const {
    std::vector<std::pair<int, int>> e;
    int n = graph.n;
    if (graph.kind == GraphFamily::Kind::Complete) {
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    } else {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) e.emplace_back(i, n + j);
    }
    return e;
  }

  // Canonical base cycle u0: 0-1-...-(n-1)-0 for K_n, the alternating cycle
  // 0,n,1,n+1,...,n-1,2n-1 for K_{n,n}.
  std::uint64_t base_cycle() const {
    std::uint64_t mask = 0;
    int n = graph.n;
    if (graph.kind == GraphFamily::Kind::Complete) {
      for (int i = 0; i < n; ++i) mask |= 1ull << edge_index(i, (i + 1) % n);
    } else {
      for (int i = 0; i < n; ++i) {
        mask |= 1ull << edge_index(i, n + i);
        mask |= 1ull << edge_index((i + 1) % n, n + i);
      }
    }
    return mask;
  }
};

// Enumeration by fixing a start vertex and canonicalizing out the reflection;
// each cycle appears exactly once, in deterministic (permutation) order.
inline CycleSet enumerate_cycles(const GraphFamily& g) {
  CycleSet cs;
  cs.graph = g;
  const int n = g.n;
  if (g.kind == GraphFamily::Kind::Complete) {
    if (n > 10) throw std::invalid_argument("enumerate_cycles: K_n guard is n <= 10");
    cs.num_edges = n * (n - 1) / 2;
    std::vector<int> perm(n - 1);
    for (int i = 0; i < n - 1; ++i) perm[i] = i + 1;
    do {
      if (perm.front() > perm.back()) continue;  // reflection canonicalization
      std::uint64_t mask = 1ull << cs.edge_index(0, perm.front());
      for (int i = 0; i + 1 < n - 1; ++i) mask |= 1ull << cs.edge_index(perm[i], perm[i + 1]);
      mask |= 1ull << cs.edge_index(perm.back(), 0);
      cs.cycles.push_back(mask);
    } while (std::next_permutation(perm.begin(), perm.end()));
  } else {
    if (n > 5) throw std::invalid_argument("enumerate_cycles: K_{n,n} guard is n <= 5");
    cs.num_edges = n * n;
    // Cycle 0, r_0, l_1, r_1, ..., l_{n-1}, r_{n-1}; fix l_0 = 0.
    std::vector<int> lefts(n - 1), rights(n);
    for (int i = 0; i < n - 1; ++i) lefts[i] = i + 1;
    for (int i = 0; i < n; ++i) rights[i] = i;
    do {
      std::vector<int> rp = rights;
      do {
        if (n > 1 && rp.front() > rp.back()) continue;  // reflection
        std::uint64_t mask = 0;
        std::vector<int> lseq;
        lseq.push_back(0);
        lseq.insert(lseq.end(), lefts.begin(), lefts.end());
        for (int i = 0; i < n; ++i) {
          mask |= 1ull << cs.edge_index(lseq[i], n + rp[i]);
          mask |= 1ull << cs.edge_index(lseq[(i + 1) % n], n + rp[i]);
        }
        cs.cycles.push_back(mask);
      } while (std::next_permutation(rp.begin(), rp.end()));
    } while (std::next_permutation(lefts.begin(), lefts.end()));
    std::sort(cs.cycles.begin(), cs.cycles.end());
  }
  return cs;
}

// Squarefree support mask of an edge monomial (x^2 = x reduction).
inline std::uint64_t support_mask(const CycleSet& cs, const EdgeMonomial& alpha) {
  std::uint64_t mask = 0;
  for (const auto& [edge, exp] : alpha) {
    if (exp < 0) throw std::invalid_argument("support_mask: negative exponent");
    if (exp > 0) mask |= 1ull << cs.edge_index(edge.first, edge.second);
  }
  return mask;
}

// Fraction of hamiltonian cycles containing the given edge support, exact.
inline Rat cycle_support_integral(const CycleSet& cs, std::uint64_t support) {
  long count = 0;
  for (std::uint64_t c : cs.cycles)
    if ((c & support) == support) ++count;
  Rat r(count, static_cast<long>(cs.cycles.size()));
  r.canonicalize();
  return r;
}

inline Rat monomial_cycle_integral(const CycleSet& cs, const EdgeMonomial& alpha) {
  return cycle_support_integral(cs, support_mask(cs, alpha));
}

// A polynomial in the edge variables, already expanded and squarefree-reduced:
// (coefficient, support mask) terms.
using EdgePoly = std::vector<std::pair<Rat, std::uint64_t>>;

// The matching certificates s_k on K_n: M = maximum matchings contained in
// the base cycle u0 (2 for even n, n for odd n), s_k = sum over Gamma in M of
// sum over k-subsets L of Gamma of x^L.
inline EdgePoly veomett_certificate(const CycleSet& cs, int k) {
  if (cs.graph.kind != GraphFamily::Kind::Complete)
    throw std::invalid_argument("veomett_certificate: K_n only");
  const int n = cs.graph.n;
  if (k < 1 || k > n / 2) throw std::invalid_argument("veomett_certificate: 1 <= k <= n/2");
  // Cycle edges in order; maximum matchings = independent edge sets of size
  // floor(n/2) in the cycle, found by direct subset enumeration (n <= 10).
  std::vector<int> cyc(n);
  for (int i = 0; i < n; ++i) cyc[i] = cs.edge_index(i, (i + 1) % n);
  std::vector<std::vector<int>> matchings;
  for (std::uint32_t sub = 0; sub < (1u << n); ++sub) {
    if (std::popcount(sub) != n / 2) continue;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      if ((sub >> i & 1) && (sub >> ((i + 1) % n) & 1)) ok = false;
    if (!ok) continue;
    std::vector<int> m;
    for (int i = 0; i < n; ++i)
      if (sub >> i & 1) m.push_back(cyc[i]);
    matchings.push_back(std::move(m));
  }
  std::map<std::uint64_t, Rat> acc;
  for (const auto& gamma : matchings) {
    const int sz = static_cast<int>(gamma.size());
    std::vector<int> pick(k);
    for (int i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      std::uint64_t mask = 0;
      for (int i : pick) mask |= 1ull << gamma[i];
      acc[mask] += 1;
      int i = k - 1;
      while (i >= 0 && pick[i] == sz - k + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  EdgePoly s;
  for (const auto& [m, c] : acc) s.emplace_back(c, m);
  return s;
}

// The bipartite certificates p_k on K_{n,n}: u0 splits into the two perfect
// matchings Gamma_1 = {(i, n+i)}, Gamma_2 = {(i+1, n+i)}; p_k sums the
// k-subset monomials of each.
inline EdgePoly bipartite_certificate(const CycleSet& cs, int k) {
  if (cs.graph.kind != GraphFamily::Kind::CompleteBipartite)
    throw std::invalid_argument("bipartite_certificate: K_{n,n} only");
  const int n = cs.graph.n;
  if (k < 1 || k > n) throw std::invalid_argument("bipartite_certificate: 1 <= k <= n");
  std::vector<std::vector<int>> matchings(2);
  for (int i = 0; i < n; ++i) {
    matchings[0].push_back(cs.edge_index(i, n + i));
    matchings[1].push_back(cs.edge_index((i + 1) % n, n + i));
  }
  std::map<std::uint64_t, Rat> acc;
  for (const auto& gamma : matchings) {
    std::vector<int> pick(k);
    for (int i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      std::uint64_t mask = 0;
      for (int i : pick) mask |= 1ull << gamma[i];
      acc[mask] += 1;
      int i = k - 1;
      while (i >= 0 && pick[i] == n - k + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  EdgePoly s;
  for (const auto& [m, c] : acc) s.emplace_back(c, m);
  return s;
}

// Classify an edge support as a disjoint union of non-overlapping paths:
// every component with edges must be a path (degrees <= 2 and no cycle).
// Returns the (l, p, r) profile, or nullopt when some component is not a
// path (in which case the cycle integral is zero).
inline std::optional<PathProfile> classify_support(const CycleSet& cs, std::uint64_t support) {
  const int nv = cs.graph.vertex_count();
  std::vector<std::vector<int>> adj(nv);
  auto edges = cs.all_edges();
  int p = 0;
  for (const auto& [u, v] : edges) {
    if ((support >> cs.edge_index(u, v)) & 1) {
      adj[u].push_back(v);
      adj[v].push_back(u);
      ++p;
    }
  }
  for (int v = 0; v < nv; ++v)
    if (adj[v].size() > 2) return std::nullopt;
  PathProfile prof;
  prof.p = p;
  std::vector<int> comp(nv, -1);
  for (int v0 = 0; v0 < nv; ++v0) {
    if (comp[v0] >= 0 || adj[v0].empty()) continue;
    // BFS the component, counting vertices and edges.
    std::vector<int> stack{v0};
    comp[v0] = v0;
    int verts = 0, edge2 = 0;  // edge2 counts each edge twice
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      ++verts;
      edge2 += static_cast<int>(adj[v].size());
      for (int w : adj[v])
        if (comp[w] < 0) {
          comp[w] = v0;
          stack.push_back(w);
        }
    }
    int ecount = edge2 / 2;
    if (ecount != verts - 1) return std::nullopt;  // contains a cycle
    ++prof.l;
    if (ecount % 2 == 1) ++prof.r;
  }
  return prof;
}

// Two-value membership check: succeeds iff int x_ij s dmu takes exactly two
// distinct values across all edges, partitioned by membership in u0.
struct SigmaCheckResult {
  bool success = false;
  TwoValueIntegrals values;  // normalized integrals
  std::vector<std::pair<int, int>> offending_edges;
};

inline SigmaCheckResult sigma_membership_check(const CycleSet& cs, const EdgePoly& s,
                                               std::uint64_t u0) {
  SigmaCheckResult res;
  res.values.scale_note = "normalized cycle measure";
  bool have_on = false, have_off = false;
  for (const auto& [u, v] : cs.all_edges()) {
    int idx = cs.edge_index(u, v);
    Rat val(0);
    for (const auto& [c, mask] : s)
      val += c * cycle_support_integral(cs, mask | (1ull << idx));
    bool on = (u0 >> idx) & 1;
    Rat& slot = on ? res.values.on_cycle : res.values.off_cycle;
    bool& have = on ? have_on : have_off;
    if (!have) {
      slot = val;
      have = true;
    } else if (slot != val) {
      res.offending_edges.emplace_back(u, v);
    }
  }
  res.success = res.offending_edges.empty() && have_on && have_off &&
                res.values.on_cycle != res.values.off_cycle;
  return res;
}

// ---------------------------------------------------------------------------
// Sphere quadrature.
// ---------------------------------------------------------------------------
namespace detail {

// Gauss nodes/weights for the normalized weight (1-t^2)^{(n-3)/2} on [-1,1]
// via the Jacobi-matrix eigenproblem (the recurrence coefficients are those
// of the Gegenbauer family with parameter (n-2)/2).
inline void gauss_marginal(int n, int m, std::vector<double>& nodes,
                           std::vector<double>& weights) {
  double lam = 0.5 * (n - 2);
  SymMatrix jac(m);
  for (int k = 1; k < m; ++k) {
    double b2 = k * (k + 2.0 * lam - 1.0) / (4.0 * (k + lam) * (k + lam - 1.0));
    jac.at(k, k - 1) = std::sqrt(b2);
  }
  EigResult eg = sym_eig(jac);
  nodes.resize(m);
  weights.resize(m);
  for (int i = 0; i < m; ++i) {
    nodes[i] = eg.values[i];
    double v0 = eg.vectors[i][0];
    weights[i] = v0 * v0;  // weight function normalized to unit mass
  }
}

// Quadrature value of int x^gamma dmu over S^{n-1} by the recursive
// factorization through the first-coordinate marginal; base cases are the
// circle (uniform angles) and S^0.
inline double mono_sphere_quad(const std::vector<int>& gamma) {
  const int n = static_cast<int>(gamma.size());
  int deg = 0;
  for (int e : gamma) deg += e;
  if (n == 1) return gamma[0] % 2 == 0 ? 1.0 : 0.0;
  if (n == 2) {
    const int m = 2 * deg + 4;
    double s = 0.0;
    for (int i = 0; i < m; ++i) {
      double th = 2.0 * std::numbers::pi * i / m;
      s += std::pow(std::cos(th), gamma[0]) * std::pow(std::sin(th), gamma[1]);
    }
    return s / m;
  }
  std::vector<double> nodes, weights;
  gauss_marginal(n, deg / 2 + 2, nodes, weights);
  std::vector<int> rest(gamma.begin() + 1, gamma.end());
  double inner = mono_sphere_quad(rest);
  int rest_deg = deg - gamma[0];
  double s = 0.0;
  for (size_t i = 0; i < nodes.size(); ++i) {
    double t = nodes[i];
    s += weights[i] * std::pow(t, gamma[0]) * std::pow(1.0 - t * t, 0.5 * rest_deg);
  }
  return s * inner;
}

}  // namespace detail

// Independent exact evaluation of sphere monomial moments through iterated
// Beta-function marginals: split off the first coordinate,
//   int t^{2a} (1-t^2)^e w_n(t) dt
//     = prod_{i=1..a} (2i-1)/(n+2e+2i-2) * prod_{j=0..e-1} (n-1+2j)/(n+2j),
// and recurse on the remaining sphere down to S^0.  Shares no code path or
// formula shape with the closed-form product used by sphere_moments.
inline Rat beta_moment_integral(const MultiIndex& gamma) {
  const int n = gamma.n();
  if (n < 1) throw std::invalid_argument("beta_moment_integral: empty index");
  if (gamma.any_odd()) return Rat(0);
  if (n == 1) return Rat(1);
  const int a = gamma.exponents[0] / 2;
  const int rest = gamma.degree() - gamma.exponents[0];
  Rat v(1);
  for (int i = 1; i <= a; ++i) v *= Rat(2 * i - 1, n + rest + 2 * i - 2);
  for (int j = 0; j < rest / 2; ++j) v *= Rat(n - 1 + 2 * j, n + 2 * j);
  MultiIndex tail(std::vector<int>(gamma.exponents.begin() + 1, gamma.exponents.end()));
  v *= beta_moment_integral(tail);
  v.canonicalize();
  return v;
}

// Float cross-check of the exact sphere moments: deterministic tensor
// quadrature, relative error <= 1e-9 on monomials at desk scale.
inline double sphere_quadrature_integral(const HomogPoly& p) {
  if (p.n > 6 || p.degree > 12)
    throw std::invalid_argument("sphere_quadrature_integral: guard is n <= 6, degree <= 12");
  double s = 0.0;
  for (const auto& [a, c] : p.terms) s += to_double(c) * detail::mono_sphere_quad(a.exponents);
  return s;
}

}  // namespace bvl
