#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "bvl/numerics.hpp"

using bvl::SymMatrix;

namespace {

SymMatrix from_rows(const std::vector<std::vector<double>>& rows) {
  SymMatrix m(static_cast<int>(rows.size()));
  for (int i = 0; i < m.dim; ++i)
    for (int j = 0; j <= i; ++j) m.at(i, j) = rows[i][j];
  return m;
}

}  // namespace

TEST_CASE("sym_eig reproduces known spectra", "[numerics]") {
  // [[2,1],[1,2]] has eigenvalues 3 and 1.
  SymMatrix a = from_rows({{2}, {1, 2}});
  bvl::EigResult eg = bvl::sym_eig(a);
  CHECK(eg.values[0] == Catch::Approx(3.0).margin(1e-12));
  CHECK(eg.values[1] == Catch::Approx(1.0).margin(1e-12));

  // Path-graph Laplacian on 4 vertices: eigenvalues 2 - 2 cos(pi j / 4).
  SymMatrix l = from_rows({{1}, {-1, 2}, {0, -1, 2}, {0, 0, -1, 1}});
  eg = bvl::sym_eig(l);
  for (int j = 0; j < 4; ++j) {
    double want = 2.0 - 2.0 * std::cos(std::numbers::pi * (3 - j) / 4.0);
    CHECK(eg.values[j] == Catch::Approx(want).margin(1e-12));
  }
}

TEST_CASE("sym_eig residuals and orthonormality on random matrices", "[numerics]") {
  std::mt19937 rng(20240817);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 5; ++trial) {
    const int n = 8;
    SymMatrix m(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j <= i; ++j) m.at(i, j) = u(rng);
    bvl::EigResult eg = bvl::sym_eig(m);
    for (int k = 0; k < n; ++k) {
      // || M v - lambda v ||_inf
      for (int i = 0; i < n; ++i) {
        double mv = 0;
        for (int j = 0; j < n; ++j) mv += m.at(i, j) * eg.vectors[k][j];
        CHECK(mv == Catch::Approx(eg.values[k] * eg.vectors[k][i]).margin(1e-10));
      }
      for (int k2 = 0; k2 <= k; ++k2) {
        double dot = 0;
        for (int i = 0; i < n; ++i) dot += eg.vectors[k][i] * eg.vectors[k2][i];
        CHECK(dot == Catch::Approx(k == k2 ? 1.0 : 0.0).margin(1e-10));
      }
    }
    CHECK(eg.values.front() >= eg.values.back());
  }
}

TEST_CASE("is_psd and min_eigenvalue agree on definiteness", "[numerics]") {
  CHECK(bvl::is_psd(from_rows({{1}, {0, 0}})));
  CHECK_FALSE(bvl::is_psd(from_rows({{1}, {2, 1}})));
  CHECK(bvl::min_eigenvalue(from_rows({{0}, {1, 0}})) == Catch::Approx(-1.0).margin(1e-12));
}

TEST_CASE("sym_inner doubles off-diagonal contributions", "[numerics]") {
  SymMatrix a = from_rows({{1}, {2, 3}});
  SymMatrix b = from_rows({{4}, {5, 6}});
  // <A,B> = 1*4 + 3*6 + 2*(2*5)
  CHECK(bvl::sym_inner(a, b) == Catch::Approx(42.0));
  CHECK(a.frobenius_norm() == Catch::Approx(std::sqrt(1.0 + 3 * 3 + 2 * 2 * 2)));
}

TEST_CASE("solve_sdp on an analytically solvable instance", "[numerics][sdp]") {
  // max y s.t. [[1,y],[y,1]] >= 0  (C = I, A = [[0,1],[1,0]], b = ... ) in
  // standard dual form: max b'y s.t. C - y A >= 0 with C = I, A = -E_{01},
  // b = 1; the optimum is y* = 1 with dual slack singular, so target y = 1.
  bvl::SdpProblem p;
  p.dim = 2;
  p.objective = from_rows({{1}, {0, 1}});
  SymMatrix a = from_rows({{0}, {-1, 0}});
  p.constraints.emplace_back(a, 1.0);
  bvl::SdpSolution sol = bvl::solve_sdp(p);
  REQUIRE(sol.status == bvl::SdpStatus::Optimal);
  CHECK(sol.dual_value == Catch::Approx(1.0).margin(1e-5));
  CHECK(sol.value == Catch::Approx(sol.dual_value).margin(1e-5));
}

TEST_CASE("solve_sdp strict-interior instance with known optimum", "[numerics][sdp]") {
  // min tr(X) s.t. X_01 + X_10 = 1, X >= 0 (2x2).  Optimum X = [[.5,.5],[.5,.5]],
  // value 1: for PSD X, 2 X_01 <= X_00 + X_11 by AM-GM on the 2x2 minor.
  bvl::SdpProblem p;
  p.dim = 2;
  p.objective = from_rows({{1}, {0, 1}});
  SymMatrix a = from_rows({{0}, {1, 0}});
  p.constraints.emplace_back(a, 1.0);
  bvl::SdpSolution sol = bvl::solve_sdp(p);
  REQUIRE(sol.status == bvl::SdpStatus::Optimal);
  CHECK(sol.value == Catch::Approx(1.0).margin(1e-6));
  CHECK(sol.X.at(0, 1) == Catch::Approx(0.5).margin(1e-5));
}

TEST_CASE("solve_sdp multi-constraint instance", "[numerics][sdp]") {
  // min <C,X> s.t. X_00 = 1, X_11 = 1, X >= 0, C = [[0,1],[1,0]]:
  // minimize 2 X_01 subject to the correlation constraint |X_01| <= 1,
  // optimum -2.
  bvl::SdpProblem p;
  p.dim = 2;
  p.objective = from_rows({{0}, {1, 0}});
  p.constraints.emplace_back(from_rows({{1}, {0, 0}}), 1.0);
  p.constraints.emplace_back(from_rows({{0}, {0, 1}}), 1.0);
  bvl::SdpSolution sol = bvl::solve_sdp(p);
  REQUIRE(sol.status == bvl::SdpStatus::Optimal);
  CHECK(sol.value == Catch::Approx(-2.0).margin(1e-5));
}
