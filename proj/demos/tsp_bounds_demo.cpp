// Demo: exact scaling bounds for the symmetric TSP cones, printed as exact
// rationals alongside their decimal values.

#include <cstdio>

#include "bvl/tsp_scaling.hpp"

int main() {
  std::printf("K_n bounds (n = 12):\n");
  std::printf("%4s  %22s  %22s\n", "k", "plain certificate", "improved");
  for (int k = 1; k <= 6; ++k) {
    bvl::KnBoundValues v = bvl::kn_bound_exact(12, k);
    std::printf("%4d  %22s  %22s\n", k, bvl::rat_to_decimal(v.veomett, 12).c_str(),
                bvl::rat_to_decimal(v.improved, 12).c_str());
  }

  std::printf("\nK_{n,n} bounds (n = 8):\n");
  std::printf("%4s  %22s  %22s\n", "k", "cap", "improved");
  for (int k = 1; k <= 6; ++k) {
    bvl::KnnBoundValues v = bvl::knn_bound_exact(8, k);
    std::printf("%4d  %22s  %22s\n", k,
                v.cap ? bvl::rat_to_decimal(*v.cap, 12).c_str() : "-",
                bvl::rat_to_decimal(v.improved, 12).c_str());
  }

  std::printf("\nImprovement ratio vs the conjectured logarithmic envelope (n = 20):\n");
  for (int k = 1; k <= 5; ++k) {
    bvl::ImprovementRatio r = bvl::improvement_ratio(20, k);
    std::printf("  k=%d  lhs=%.9f  rhs=%.9f  %s\n", k, r.lhs, r.rhs,
                r.conjecture_holds ? "holds" : "violated");
  }
  return 0;
}
