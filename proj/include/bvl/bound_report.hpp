#pragma once

// BoundReport: the unit of output shared by the polynomial-cone and
// TSP-cone bound computations.

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "bvl/rational.hpp"

namespace bvl {

struct BoundReport {
  std::string method;  // "reduced-sdp", "full-sdp", "legendre-fixed",
                       // "legendre-opt", "closed-form", "veomett",
                       // "improved-kn", "cap-knn", "improved-knn"
  // Polynomial-cone parameters (n,d,k) or graph parameters (graph,n,k).
  int n = 0;
  int d = 0;
  int k = 0;
  std::string graph;  // "kn" / "knn" when applicable

  double bound = std::numeric_limits<double>::quiet_NaN();
  std::optional<Rat> exact;  // exact rational value when the method is closed-form

  // Certificates.
  std::optional<std::vector<double>> zonal_certificate;  // a_0..a_d
  std::optional<std::vector<double>> profile_certificate;  // q* coefficients, ascending

  std::string solver_status = "exact";
  bool verified = true;

  // Method-specific companion value (e.g. the Gatteschi-approximated variant
  // of the closed form, or the plain Veomett value next to an improved bound).
  std::optional<double> companion;
  std::string companion_label;

  // Closed forms outside their rigorously justified range are labeled.
  bool heuristic = false;
};

}  // namespace bvl
