// Acceptance gate: one pass/fail line per criterion, pinned tolerances.
// Exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "bvl/harmonics.hpp"
#include "bvl/oracle.hpp"
#include "bvl/poly_scaling.hpp"
#include "bvl/sphere_moments.hpp"
#include "bvl/tsp_scaling.hpp"

using bvl::GraphFamily;
using bvl::Rat;

namespace {

int failures = 0;

void report(int idx, const char* name, bool pass, const std::string& detail,
            double seconds) {
  std::printf("%s  criterion %d (%s): %s  [%.1fs]\n", pass ? "PASS" : "FAIL", idx, name,
              detail.c_str(), seconds);
  if (!pass) ++failures;
}

template <typename F>
double timed(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

// Criteria 1-2: reduced-SDP tables against the published reference values,
// tolerance +-5e-3 per entry.
void table_criterion(int idx, const char* name, int n, int d, int k0,
                     const std::vector<double>& reference) {
  std::string detail;
  bool pass = true;
  double secs = timed([&] {
    for (size_t i = 0; i < reference.size(); ++i) {
      int k = k0 + static_cast<int>(i);
      bvl::BoundReport r = bvl::invariant_sdp_bound(n, d, k);
      bool ok = r.verified && std::fabs(r.bound - reference[i]) <= 5e-3;
      if (!ok) pass = false;
      detail += "k=" + std::to_string(k) + ": " + fmt(r.bound) + (ok ? "~" : "!") +
                fmt(reference[i]) + " ";
    }
  });
  report(idx, name, pass, detail, secs);
}

void criterion_3() {
  bool pass = true;
  std::string detail;
  double secs = timed([&] {
    auto check = [&](const GraphFamily& g, const char* label) {
      bvl::CycleSet cs = bvl::enumerate_cycles(g);
      std::set<std::uint64_t> hamiltonian(cs.cycles.begin(), cs.cycles.end());
      Rat per_cycle(1, static_cast<long>(cs.cycles.size()));
      per_cycle.canonicalize();
      long bad = 0;
      for (std::uint64_t s = 1; s < (1ull << cs.num_edges); ++s) {
        auto prof = bvl::classify_support(cs, s);
        // Path systems follow the lemma; cyclic supports integrate to zero
        // unless the support is itself a hamiltonian cycle.
        Rat formula = prof ? (g.kind == GraphFamily::Kind::Complete
                                  ? bvl::kn_path_integral(g.n, *prof)
                                  : bvl::knn_path_integral(g.n, *prof))
                           : (hamiltonian.count(s) ? per_cycle : Rat(0));
        if (formula != bvl::cycle_support_integral(cs, s)) ++bad;
      }
      if (bad != 0) pass = false;
      detail += std::string(label) + "=" + std::to_string(bad) + " ";
    };
    check(GraphFamily::complete(5), "K5-mismatches");
    check(GraphFamily::complete(6), "K6-mismatches");
    check(GraphFamily::complete(7), "K7-mismatches");
    check(GraphFamily::bipartite(3), "K33-mismatches");
    check(GraphFamily::bipartite(4), "K44-mismatches");
  });
  report(3, "path-integral formulas vs enumeration, exact", pass, detail, secs);
}

void criterion_4() {
  bool pass = true;
  std::string detail;
  double secs = timed([&] {
    for (int n : {6, 7})
      for (int k : {1, 2}) {
        bvl::CycleSet cs = bvl::enumerate_cycles(GraphFamily::complete(n));
        auto s = bvl::veomett_certificate(cs, k);
        auto chk = bvl::sigma_membership_check(cs, s, cs.base_cycle());
        bvl::TwoValueIntegrals ab = bvl::veomett_constants(n, k);
        bool ok = chk.success && chk.values.off_cycle * ab.on_cycle ==
                                     chk.values.on_cycle * ab.off_cycle;
        if (!ok) pass = false;
        detail += "n" + std::to_string(n) + "k" + std::to_string(k) +
                  (ok ? ":ok " : ":bad ");
      }
  });
  report(4, "two-value certificate constants, exact ratio", pass, detail, secs);
}

void criterion_5() {
  bool pass = true;
  std::string detail = "all-exact";
  double secs = timed([&] {
    for (int n = 4; n <= 60 && pass; ++n)
      for (int k = 1; k <= n / 2 && pass; ++k) {
        bvl::KnBoundValues v = bvl::kn_bound_exact(n, k);
        if (!(v.improved <= v.veomett && v.veomett <= v.cap)) {
          pass = false;
          detail = "kn chain broken at n=" + std::to_string(n) + " k=" + std::to_string(k);
        }
      }
    for (int n = 3; n <= 60 && pass; ++n)
      for (int k = 1; k <= n && pass; ++k) {
        bvl::KnnBoundValues v = bvl::knn_bound_exact(n, k);
        if (v.cap && !(v.improved <= *v.cap)) {
          pass = false;
          detail = "knn cap broken at n=" + std::to_string(n) + " k=" + std::to_string(k);
        }
      }
    for (int n = 4; n <= 60 && pass; ++n)
      if (bvl::kn_k1_closed_form(n) != bvl::kn_bound_exact(n, 1).improved) {
        pass = false;
        detail = "k=1 closed form differs at n=" + std::to_string(n);
      }
  });
  report(5, "bound chains n <= 60, exact rational", pass, detail, secs);
}

void criterion_6() {
  bool pass = true;
  std::string detail;
  double secs = timed([&] {
    for (auto [n, d, k] : {std::tuple{3, 1, 1}, {3, 2, 2}, {3, 3, 3}}) {
      bvl::BoundReport fu = bvl::full_sdp_bound(n, d, k);
      bvl::BoundReport in = bvl::invariant_sdp_bound(n, d, k);
      bool ok = fu.verified && in.verified && fu.bound <= in.bound + 1e-6;
      if (!ok) pass = false;
      detail += "(" + std::to_string(n) + "," + std::to_string(d) + "," +
                std::to_string(k) + ")" + (ok ? ":ok " : ":bad ");
    }
    double prev = std::numeric_limits<double>::infinity();
    for (int k = 3; k <= 8; ++k) {
      bvl::BoundReport r = bvl::invariant_sdp_bound(3, 3, k);
      bool ok = r.verified && r.bound <= prev + 1e-7;
      if (!ok) pass = false;
      prev = r.bound;
    }
    detail += "monotone(3,3,3..8)" + std::string(pass ? ":ok" : ":bad");
  });
  report(6, "relaxation ordering", pass, detail, secs);
}

void criterion_7() {
  bool pass = true;
  std::string detail;
  double secs = timed([&] {
    bvl::BoundReport fx11 = bvl::legendre_bound_fixed(3, 1, 1);
    bool ok = fx11.bound == 2.5;
    if (!ok) pass = false;
    detail += std::string("fixed(3,1,1)=2.5") + (ok ? ":ok " : ":bad ");

    for (auto [n, d, k] : {std::tuple{3, 1, 2}, {3, 2, 3}, {3, 3, 4}}) {
      bvl::BoundReport fx = bvl::legendre_bound_fixed(n, d, k);
      bvl::BoundReport op = bvl::legendre_bound_optimized(n, d, k);
      bvl::BoundReport fu = bvl::full_sdp_bound(n, d, k);
      bool okc = op.verified && fu.verified && op.bound <= fx.bound + 1e-6 &&
                 op.bound >= fu.bound - 1e-6;
      if (!okc) pass = false;
      detail += "chain(" + std::to_string(n) + "," + std::to_string(d) + "," +
                std::to_string(k) + ")" + (okc ? ":ok " : ":bad ");
    }
    for (int d = 1; d <= 6; ++d) {
      bvl::BoundReport cf = bvl::closed_form_bound(3, d);
      bvl::BoundReport fx = bvl::legendre_bound_fixed(3, d, d);
      if (!(cf.bound >= fx.bound - 1e-9)) {
        pass = false;
        detail += "closed-form<d=" + std::to_string(d) + " ";
      }
    }
    bool g1 = std::fabs(bvl::gatteschi_root(2) - bvl::largest_legendre_root(4)) < 1e-4;
    bool g2 = std::fabs(bvl::gatteschi_root(10) - bvl::largest_legendre_root(20)) < 1e-8;
    if (!(g1 && g2)) pass = false;
    detail += std::string("gatteschi") + ((g1 && g2) ? ":ok" : ":bad");
  });
  report(7, "legendre pipeline", pass, detail, secs);
}

void criterion_8() {
  bool pass = true;
  std::string detail;
  double secs = timed([&] {
    // Motzkin form inside for k = 3..5.
    bvl::HomogPoly mz(3, 6);
    mz.add_term(bvl::MultiIndex(std::vector<int>{4, 2, 0}), Rat(1));
    mz.add_term(bvl::MultiIndex(std::vector<int>{2, 4, 0}), Rat(1));
    mz.add_term(bvl::MultiIndex(std::vector<int>{2, 2, 2}), Rat(-3));
    mz.add_term(bvl::MultiIndex(std::vector<int>{0, 0, 6}), Rat(1));
    for (int k = 3; k <= 5; ++k) {
      bool ok = bvl::membership_test(mz, k).verdict == bvl::Membership::Inside;
      if (!ok) pass = false;
      detail += "motzkin-k" + std::to_string(k) + (ok ? ":in " : ":bad ");
    }

    // (sum x^2)^d - 1.5 x1^{2d} leaves the approximation at some k <= 10.
    for (int d : {1, 2}) {
      bvl::HomogPoly p = bvl::poly_pow(bvl::radius_squared(3), d);
      std::vector<int> spike(3, 0);
      spike[0] = 2 * d;
      p.add_term(bvl::MultiIndex(spike), Rat(-3, 2));
      bool found = false;
      for (int k = d; k <= 10 && !found; ++k)
        found = bvl::membership_test(p, k).verdict == bvl::Membership::Outside;
      if (!found) pass = false;
      detail += "spike-d" + std::to_string(d) + (found ? ":out " : ":bad ");
    }

    // Outside is monotone in k: once a seeded random indefinite quartic
    // leaves the (shrinking) approximation it never re-enters.
    std::mt19937 rng(7); // fixed seed: deterministic acceptance
    std::uniform_int_distribution<int> coef(-4, 4);
    auto basis = bvl::basis_multiindices(3, 4);
    int monotone_bad = 0, indefinite_seen = 0;
    while (indefinite_seen < 20) {
      bvl::HomogPoly p(3, 4);
      for (const auto& a : basis) p.add_term(a, Rat(coef(rng)));
      if (p.is_zero()) continue;
      // Keep only forms that are provably indefinite by sampling.
      bool has_neg = false, has_pos = false;
      std::uniform_real_distribution<double> u(-1.0, 1.0);
      for (int t = 0; t < 200; ++t) {
        double v = p.eval(std::vector<double>{u(rng), u(rng), u(rng)});
        has_neg = has_neg || v < -1e-9;
        has_pos = has_pos || v > 1e-9;
      }
      if (!(has_neg && has_pos)) continue;
      ++indefinite_seen;
      bool outside_seen = false;
      for (int k = 2; k <= 5; ++k) {
        bvl::Membership v = bvl::membership_test(p, k).verdict;
        if (outside_seen && v != bvl::Membership::Outside) ++monotone_bad;
        if (v == bvl::Membership::Outside) outside_seen = true;
      }
    }
    if (monotone_bad != 0) pass = false;
    detail += "monotone-violations=" + std::to_string(monotone_bad);
  });
  report(8, "membership and convergence", pass, detail, secs);
}

void criterion_9() {
  bool pass = true;
  std::string detail;
  double secs = timed([&] {
    long bad = 0, total = 0;
    for (int n = 2; n <= 5; ++n)
      for (int deg = 0; deg <= 8; ++deg)
        for (const bvl::MultiIndex& a : bvl::basis_multiindices(n, deg)) {
          ++total;
          if (bvl::monomial_sphere_integral(a) != bvl::beta_moment_integral(a)) ++bad;
        }
    double worst = 0.0;
    for (int n = 2; n <= 4; ++n)
      for (int deg = 0; deg <= 8; deg += 2)
        for (const bvl::MultiIndex& a : bvl::basis_multiindices(n, deg)) {
          double exact = bvl::to_double(bvl::monomial_sphere_integral(a));
          double quad =
              bvl::sphere_quadrature_integral(bvl::HomogPoly::monomial(n, a));
          worst = std::max(worst, std::fabs(quad - exact));
        }
    if (bad != 0 || worst > 1e-9) pass = false;
    detail = std::to_string(total) + " exact moments, " + std::to_string(bad) +
             " mismatches, quadrature max err " + fmt(worst);
  });
  report(9, "moment exactness", pass, detail, secs);
}

}  // namespace

int main() {
  table_criterion(1, "quaternary quartics table, reduced SDP", 4, 2, 2,
                  {2.755044, 1.949091, 1.607291, 1.425842, 1.316627, 1.245305, 1.195964});
  table_criterion(2, "ternary sextics table, reduced SDP", 3, 3, 3,
                  {2.668980, 2.055565, 1.746356, 1.526781, 1.387487, 1.315492});
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  if (failures != 0) {
    std::printf("ACCEPTANCE: %d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("ACCEPTANCE: all criteria passed\n");
  return 0;
}
