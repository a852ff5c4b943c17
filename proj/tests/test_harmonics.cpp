#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "bvl/harmonics.hpp"
#include "bvl/sphere_moments.hpp"

using bvl::HomogPoly;
using bvl::MultiIndex;
using bvl::Rat;
using bvl::UniPoly;

TEST_CASE("classical Legendre polynomials by Rodrigues", "[harmonics]") {
  CHECK(bvl::legendre(0) == UniPoly({Rat(1)}));
  CHECK(bvl::legendre(1) == UniPoly({Rat(0), Rat(1)}));
  CHECK(bvl::legendre(2) == UniPoly({Rat(-1, 2), Rat(0), Rat(3, 2)}));
  CHECK(bvl::legendre(4) ==
        UniPoly({Rat(3, 8), Rat(0), Rat(-15, 4), Rat(0), Rat(35, 8)}));
  for (int m = 0; m <= 10; ++m) {
    CHECK(bvl::legendre(m).eval(Rat(1)) == Rat(1));
    CHECK(bvl::legendre(m).eval(Rat(-1)) == (m % 2 == 0 ? Rat(1) : Rat(-1)));
  }
}

TEST_CASE("harmonic space dimensions", "[harmonics]") {
  // n = 3: h_m = 2m + 1.
  for (int m = 0; m <= 10; ++m) CHECK(bvl::harmonic_dim(3, m) == 2 * m + 1);
  CHECK(bvl::harmonic_dim(4, 2) == 9);
  CHECK(bvl::harmonic_dim(2, 0) == 1);
  for (int m = 1; m <= 6; ++m) CHECK(bvl::harmonic_dim(2, m) == 2);
  // Dimension count: homogeneous = sum of harmonic layers.
  for (int n = 2; n <= 6; ++n)
    for (int m = 0; m <= 8; ++m) {
      bvl::Int sum(0);
      for (int i = 0; 2 * i <= m; ++i) sum += bvl::harmonic_dim(n, m - 2 * i);
      CHECK(sum == bvl::binomial(n + m - 1, n - 1));
    }
}

TEST_CASE("marginal moments match the first-coordinate sphere integrals", "[harmonics]") {
  // int t^a w_n(t) dt over [-1,1] equals int u_1^a dmu over S^{n-1}.
  for (int n = 2; n <= 5; ++n) {
    std::vector<Rat> mom = bvl::marginal_moments(n, 10);
    for (int a = 0; a <= 10; ++a) {
      std::vector<int> e(n, 0);
      e[0] = a;
      CHECK(mom[a] == bvl::monomial_sphere_integral(MultiIndex(e)));
    }
  }
}

TEST_CASE("zonal profiles are orthogonal and normalized at 1", "[harmonics]") {
  for (int n = 3; n <= 5; ++n) {
    std::vector<Rat> mom = bvl::marginal_moments(n, 20);
    std::vector<UniPoly> q(10);
    for (int m = 0; m <= 9; ++m) {
      q[m] = bvl::zonal_profile(n, m);
      CHECK(q[m].degree() == m);
      CHECK(q[m].eval(Rat(1)) == Rat(1));
    }
    for (int a = 0; a <= 9; ++a)
      for (int b = a + 1; b <= 9; ++b)
        CHECK(bvl::detail::weighted_inner(q[a], q[b], mom) == Rat(0));
  }
}

TEST_CASE("zonal profile at n = 3 is the classical Legendre polynomial", "[harmonics]") {
  for (int m = 0; m <= 12; ++m) CHECK(bvl::zonal_profile(3, m) == bvl::legendre(m));
  // And at n != 3 it differs beyond degree 1 (Gegenbauer family changes).
  CHECK_FALSE(bvl::zonal_profile(4, 2) == bvl::legendre(2));
  CHECK(bvl::zonal_profile(4, 1) == bvl::legendre(1));
}

TEST_CASE("zonal profile integrates to zero against lower even powers", "[harmonics]") {
  // Orthogonality to every polynomial of lower degree, checked monomially.
  for (int n = 3; n <= 4; ++n) {
    std::vector<Rat> mom = bvl::marginal_moments(n, 16);
    for (int m = 2; m <= 7; ++m) {
      UniPoly q = bvl::zonal_profile(n, m);
      for (int a = 0; a < m; ++a) {
        std::vector<Rat> c(a + 1, Rat(0));
        c[a] = 1;
        CHECK(bvl::detail::weighted_inner(q, UniPoly(std::move(c)), mom) == Rat(0));
      }
    }
  }
}

TEST_CASE("harmonic decomposition round-trips and components are harmonic",
          "[harmonics]") {
  auto roundtrip = [](HomogPoly p) {
    bvl::HarmonicDecomposition dec = bvl::harmonic_decompose(p);
    CHECK(dec.reconstruct(p.n).terms == p.terms);
    for (const HomogPoly& c : dec.components) CHECK(c.laplacian().is_zero());
    return dec;
  };
  HomogPoly a(3, 4);
  a.add_term(MultiIndex(std::vector<int>{4, 0, 0}), Rat(1));
  roundtrip(a);

  HomogPoly b(4, 3);
  b.add_term(MultiIndex(std::vector<int>{1, 1, 1, 0}), Rat(5));
  b.add_term(MultiIndex(std::vector<int>{3, 0, 0, 0}), Rat(-2, 7));
  roundtrip(b);

  // An already-harmonic input decomposes as itself.
  HomogPoly h(2, 2);
  h.add_term(MultiIndex(std::vector<int>{2, 0}), Rat(1));
  h.add_term(MultiIndex(std::vector<int>{0, 2}), Rat(-1));
  bvl::HarmonicDecomposition dec = bvl::harmonic_decompose(h);
  REQUIRE(!dec.components.empty());
  CHECK(dec.components[0].terms == h.terms);
  for (size_t i = 1; i < dec.components.size(); ++i)
    CHECK(dec.components[i].is_zero());
}

TEST_CASE("decomposing (sum x^2)^2 isolates the radial part", "[harmonics]") {
  HomogPoly p = bvl::poly_pow(bvl::radius_squared(3), 2);
  bvl::HarmonicDecomposition dec = bvl::harmonic_decompose(p);
  REQUIRE(dec.components.size() == 3);
  CHECK(dec.components[0].is_zero());  // degree-4 harmonic part
  CHECK(dec.components[1].is_zero());  // s * (degree-2 harmonic part)
  // s^2 * constant with constant 1.
  REQUIRE(dec.components[2].terms.size() == 1);
  CHECK(dec.components[2].terms.begin()->second == Rat(1));
}

TEST_CASE("largest Legendre root: Newton vs closed 2d = 4 value", "[harmonics]") {
  // P_4 largest root: sqrt((15 + 2 sqrt(30)) / 35).
  double want = std::sqrt((15.0 + 2.0 * std::sqrt(30.0)) / 35.0);
  CHECK(bvl::largest_legendre_root(4) == Catch::Approx(want).margin(1e-12));
  // P_2: 1/sqrt(3).
  CHECK(bvl::largest_legendre_root(2) == Catch::Approx(1.0 / std::sqrt(3.0)).margin(1e-12));
}

TEST_CASE("Gatteschi approximation converges to the Newton root", "[harmonics]") {
  CHECK(std::fabs(bvl::gatteschi_root(2) - bvl::largest_legendre_root(4)) < 1e-4);
  CHECK(std::fabs(bvl::gatteschi_root(10) - bvl::largest_legendre_root(20)) < 1e-8);
  // Monotone quality: the asymptotic error should shrink with d.
  double e2 = std::fabs(bvl::gatteschi_root(2) - bvl::largest_legendre_root(4));
  double e6 = std::fabs(bvl::gatteschi_root(6) - bvl::largest_legendre_root(12));
  CHECK(e6 < e2);
}

TEST_CASE("first positive Bessel J0 root", "[harmonics]") {
  CHECK(bvl::bessel_j0_first_root() == Catch::Approx(2.404825557695773).margin(1e-12));
}
