// Command-line front end: bound tables, TSP bound tables, verification
// suites, zonal profile figure data, and the spectrahedral membership test.
//
// Exit codes: 0 success, 1 usage error, 2 solver non-convergence,
// 3 verification failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bvl/harmonics.hpp"
#include "bvl/oracle.hpp"
#include "bvl/poly_scaling.hpp"
#include "bvl/sphere_moments.hpp"
#include "bvl/tsp_scaling.hpp"

using nlohmann::json;

namespace {

constexpr const char* kVersion = "1.0.0";

std::string fmt_double(double v, int sig = 15) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", sig, v);
  return buf;
}

// Inclusive range "a..b" (or a single integer "a").
std::optional<std::pair<int, int>> parse_range(const std::string& s) {
  auto pos = s.find("..");
  try {
    if (pos == std::string::npos) {
      size_t used = 0;
      int v = std::stoi(s, &used);
      if (used != s.size()) return std::nullopt;
      return std::make_pair(v, v);
    }
    size_t ua = 0, ub = 0;
    std::string sa = s.substr(0, pos), sb = s.substr(pos + 2);
    int a = std::stoi(sa, &ua), b = std::stoi(sb, &ub);
    if (ua != sa.size() || ub != sb.size() || a > b) return std::nullopt;
    return std::make_pair(a, b);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

int write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open output file: " << path << "\n";
    return 1;
  }
  out << content;
  return 0;
}

json rat_json(const bvl::Rat& q) {
  return json{{"num", q.get_num().get_str()},
              {"den", q.get_den().get_str()},
              {"decimal", bvl::rat_to_decimal(q)}};
}

// ---------------------------------------------------------------------------
// poly-table
// ---------------------------------------------------------------------------
int cmd_poly_table(int n, int d, const std::string& krange, const std::string& method,
                   bool classical, const std::string& format, const std::string& out) {
  auto range = parse_range(krange);
  if (!range) {
    std::cerr << "error: invalid k range '" << krange << "' (expected a..b)\n";
    return 1;
  }
  struct Row {
    int k;
    double bound;
    std::string status;
  };
  std::vector<Row> rows;
  bool solver_failure = false;
  try {
    for (int k = range->first; k <= range->second; ++k) {
      bvl::BoundReport rep;
      if (method == "reduced") {
        rep = bvl::invariant_sdp_bound(n, d, k);
      } else if (method == "full") {
        rep = bvl::full_sdp_bound(n, d, k);
      } else if (method == "legendre-fixed") {
        rep = bvl::legendre_bound_fixed(n, d, k, classical);
      } else if (method == "legendre-opt") {
        rep = bvl::legendre_bound_optimized(n, d, k, classical);
      } else if (method == "closed-form") {
        rep = bvl::closed_form_bound(n, d);
        rep.k = k;
      } else {
        std::cerr << "error: unknown method '" << method << "'\n";
        return 1;
      }
      if (rep.solver_status != "optimal" && rep.solver_status != "exact")
        solver_failure = true;
      rows.push_back({k, rep.bound, rep.solver_status});
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  std::ostringstream os;
  if (format == "json") {
    json j{{"command", "poly-table"}, {"n", n}, {"d", d}, {"method", method}};
    j["rows"] = json::array();
    for (const Row& r : rows)
      j["rows"].push_back({{"k", r.k}, {"bound", r.bound}, {"status", r.status}});
    os << j.dump(2) << "\n";
  } else {
    os << "k,bound,method,status\n";
    for (const Row& r : rows)
      os << r.k << "," << fmt_double(r.bound) << "," << method << "," << r.status << "\n";
  }
  int rc = write_output(out, os.str());
  if (rc != 0) return rc;
  return solver_failure ? 2 : 0;
}

// ---------------------------------------------------------------------------
// tsp-bounds
// ---------------------------------------------------------------------------
int cmd_tsp_bounds(const std::string& graph, int n, const std::string& krange,
                   const std::string& format, const std::string& out) {
  auto range = parse_range(krange);
  if (!range) {
    std::cerr << "error: invalid k range '" << krange << "' (expected a..b)\n";
    return 1;
  }
  if (graph != "kn" && graph != "knn") {
    std::cerr << "error: --graph must be kn or knn\n";
    return 1;
  }
  struct Row {
    int k;
    std::string veomett, improved, cap, lhs, rhs;
    json jrow;
  };
  std::vector<Row> rows;
  try {
    for (int k = range->first; k <= range->second; ++k) {
      Row row;
      row.k = k;
      if (graph == "kn") {
        bvl::KnBoundValues v = bvl::kn_bound_exact(n, k);
        bvl::ImprovementRatio r = bvl::improvement_ratio(n, k);
        bvl::Rat lhs = v.improved / v.veomett;
        row.veomett = bvl::rat_to_decimal(v.veomett);
        row.improved = bvl::rat_to_decimal(v.improved);
        row.cap = bvl::rat_to_decimal(v.cap);
        row.lhs = bvl::rat_to_decimal(lhs);
        row.rhs = fmt_double(r.rhs, 20);
        row.jrow = {{"k", k},
                    {"veomett_bound", rat_json(v.veomett)},
                    {"improved_bound", rat_json(v.improved)},
                    {"cap_bound", rat_json(v.cap)},
                    {"ratio_lhs", rat_json(lhs)},
                    {"ratio_rhs", r.rhs},
                    {"conjecture_holds", r.conjecture_holds}};
      } else {
        bvl::KnnBoundValues v = bvl::knn_bound_exact(n, k);
        row.improved = bvl::rat_to_decimal(v.improved);
        row.cap = v.cap ? bvl::rat_to_decimal(*v.cap) : "";
        row.jrow = {{"k", k}, {"improved_bound", rat_json(v.improved)}};
        if (v.cap) row.jrow["cap_bound"] = rat_json(*v.cap);
      }
      rows.push_back(std::move(row));
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  std::ostringstream os;
  if (format == "json") {
    json j{{"command", "tsp-bounds"}, {"graph", graph}, {"n", n}};
    j["rows"] = json::array();
    for (const Row& r : rows) j["rows"].push_back(r.jrow);
    os << j.dump(2) << "\n";
  } else {
    os << "k,veomett_bound,improved_bound,cap_bound,ratio_lhs,ratio_rhs\n";
    for (const Row& r : rows)
      os << r.k << "," << r.veomett << "," << r.improved << "," << r.cap << ","
         << r.lhs << "," << r.rhs << "\n";
  }
  return write_output(out, os.str());
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------
struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

std::vector<Check> verify_moments() {
  std::vector<Check> checks;
  {
    int total = 0, bad = 0;
    for (int n = 2; n <= 5; ++n)
      for (int deg = 0; deg <= 8; ++deg)
        for (const bvl::MultiIndex& a : bvl::basis_multiindices(n, deg)) {
          ++total;
          if (bvl::monomial_sphere_integral(a) != bvl::beta_moment_integral(a)) ++bad;
        }
    checks.push_back({"folland-vs-beta-chain", bad == 0,
                      std::to_string(total) + " monomials, " + std::to_string(bad) +
                          " mismatches"});
  }
  {
    int total = 0, bad = 0;
    double worst = 0.0;
    for (int n = 2; n <= 4; ++n)
      for (int deg = 0; deg <= 8; deg += 2)
        for (const bvl::MultiIndex& a : bvl::basis_multiindices(n, deg)) {
          ++total;
          bvl::HomogPoly p = bvl::HomogPoly::monomial(n, a);
          double exact = bvl::to_double(bvl::monomial_sphere_integral(a));
          double quad = bvl::sphere_quadrature_integral(p);
          double err = std::fabs(quad - exact) / std::max(1.0, std::fabs(exact));
          worst = std::max(worst, err);
          if (err > 1e-9) ++bad;
        }
    checks.push_back({"folland-vs-quadrature", bad == 0,
                      std::to_string(total) + " monomials, max rel err " + fmt_double(worst, 3)});
  }
  return checks;
}

std::vector<Check> verify_tsp() {
  std::vector<Check> checks;
  auto formula_check = [&](const bvl::GraphFamily& g, int max_edges) {
    bvl::CycleSet cs = bvl::enumerate_cycles(g);
    auto edges = cs.all_edges();
    const int ne = cs.num_edges;
    long total = 0, bad = 0;
    // All supports with 1..max_edges edges.
    std::vector<int> pick;
    auto rec = [&](auto&& self, int start, int remaining, std::uint64_t mask) -> void {
      if (!pick.empty()) {
        ++total;
        auto prof = bvl::classify_support(cs, mask);
        bvl::Rat formula = prof ? (g.kind == bvl::GraphFamily::Kind::Complete
                                       ? bvl::kn_path_integral(g.n, *prof)
                                       : bvl::knn_path_integral(g.n, *prof))
                                : bvl::Rat(0);
        if (formula != bvl::cycle_support_integral(cs, mask)) ++bad;
      }
      if (remaining == 0) return;
      for (int e = start; e < ne; ++e) {
        pick.push_back(e);
        self(self, e + 1, remaining - 1, mask | (1ull << e));
        pick.pop_back();
      }
    };
    rec(rec, 0, max_edges, 0);
    return std::make_pair(total, bad);
  };
  for (int n : {5, 6, 7}) {
    auto [total, bad] = formula_check(bvl::GraphFamily::complete(n), 4);
    checks.push_back({"kn-path-formula-vs-enumeration-n" + std::to_string(n), bad == 0,
                      std::to_string(total) + " supports, " + std::to_string(bad) +
                          " mismatches"});
  }
  for (int n : {3, 4}) {
    auto [total, bad] = formula_check(bvl::GraphFamily::bipartite(n), 4);
    checks.push_back({"knn-path-formula-vs-enumeration-n" + std::to_string(n), bad == 0,
                      std::to_string(total) + " supports, " + std::to_string(bad) +
                          " mismatches"});
  }
  for (int n : {6, 7})
    for (int k : {1, 2}) {
      bvl::CycleSet cs = bvl::enumerate_cycles(bvl::GraphFamily::complete(n));
      auto s = bvl::veomett_certificate(cs, k);
      auto chk = bvl::sigma_membership_check(cs, s, cs.base_cycle());
      bvl::TwoValueIntegrals ab = bvl::veomett_constants(n, k);
      bool ok = chk.success && chk.values.off_cycle * ab.on_cycle ==
                                   chk.values.on_cycle * ab.off_cycle;
      checks.push_back({"two-value-kn-n" + std::to_string(n) + "-k" + std::to_string(k), ok,
                        ok ? "ratio matches exactly" : "mismatch"});
    }
  for (int k : {1, 2}) {
    bvl::CycleSet cs = bvl::enumerate_cycles(bvl::GraphFamily::bipartite(3));
    auto s = bvl::bipartite_certificate(cs, k);
    auto chk = bvl::sigma_membership_check(cs, s, cs.base_cycle());
    bvl::TwoValueIntegrals ge = bvl::knn_constants(3, k);
    bool ok = chk.success &&
              chk.values.off_cycle * ge.on_cycle == chk.values.on_cycle * ge.off_cycle;
    checks.push_back({"two-value-knn-n3-k" + std::to_string(k), ok,
                      ok ? "ratio matches exactly" : "mismatch"});
  }
  {
    bool ok = true;
    for (int n : {5, 6, 7}) {
      bvl::Rat want(2, n - 1);
      want.canonicalize();
      ok = ok && bvl::kn_path_integral(n, {1, 1, 0}) == want;
    }
    for (int n : {3, 4}) {
      bvl::Rat want(2, n);
      want.canonicalize();
      ok = ok && bvl::knn_path_integral(n, {1, 1, 1}) == want;
    }
    checks.push_back({"edge-normalization", ok, "2/(n-1) for K_n, 2/n for K_{n,n}"});
  }
  return checks;
}

std::vector<Check> verify_harmonics() {
  std::vector<Check> checks;
  {
    int bad = 0;
    for (int n = 3; n <= 5; ++n) {
      std::vector<bvl::Rat> mom = bvl::marginal_moments(n, 18);
      std::vector<bvl::UniPoly> q(9);
      for (int m = 0; m <= 8; ++m) q[m] = bvl::zonal_profile(n, m);
      for (int a = 0; a <= 8; ++a)
        for (int b = a + 1; b <= 8; ++b)
          if (bvl::detail::weighted_inner(q[a], q[b], mom) != 0) ++bad;
    }
    checks.push_back({"zonal-orthogonality", bad == 0,
                      "n=3..5, degrees to 8, " + std::to_string(bad) + " violations"});
  }
  {
    bool ok = true;
    for (int m = 0; m <= 12; ++m)
      if (!(bvl::zonal_profile(3, m) == bvl::legendre(m))) ok = false;
    checks.push_back({"zonal-equals-legendre-n3", ok, "m = 0..12, exact"});
  }
  {
    bool ok = true;
    auto roundtrip = [&](const bvl::HomogPoly& p) {
      bvl::HarmonicDecomposition dec = bvl::harmonic_decompose(p);
      bvl::HomogPoly rec = dec.reconstruct(p.n);
      if (!(rec.terms == p.terms)) return false;
      for (const auto& c : dec.components)
        if (!c.laplacian().is_zero()) return false;
      return true;
    };
    bvl::HomogPoly a(3, 4);
    a.add_term(bvl::MultiIndex(std::vector<int>{4, 0, 0}), bvl::Rat(1));
    bvl::HomogPoly b(3, 4);
    b.add_term(bvl::MultiIndex(std::vector<int>{2, 2, 0}), bvl::Rat(1));
    bvl::HomogPoly c(4, 4);
    c.add_term(bvl::MultiIndex(std::vector<int>{3, 1, 0, 0}), bvl::Rat(2));
    c.add_term(bvl::MultiIndex(std::vector<int>{1, 1, 1, 1}), bvl::Rat(-1, 3));
    ok = roundtrip(a) && roundtrip(b) && roundtrip(c);
    checks.push_back({"harmonic-decomposition-roundtrip", ok,
                      "reconstruction exact, components harmonic"});
  }
  {
    bool ok = true;
    for (int n = 3; n <= 5; ++n)
      for (int m = 0; m <= 8; ++m) {
        bvl::Int sum(0);
        for (int i = 0; 2 * i <= m; ++i) sum += bvl::harmonic_dim(n, m - 2 * i);
        if (sum != bvl::binomial(n + m - 1, n - 1)) ok = false;
      }
    checks.push_back({"harmonic-dimension-sum", ok,
                      "sum of h_{m-2i} equals the homogeneous dimension"});
  }
  return checks;
}

std::vector<Check> verify_sdp() {
  std::vector<Check> checks;
  {
    bvl::BoundReport r = bvl::invariant_sdp_bound(3, 1, 1);
    // Analytic optimum of the 2x2 program: bound = 5(sqrt(54/245) - 1/7).
    double analytic = 5.0 * (std::sqrt(54.0 / 245.0) - 1.0 / 7.0);
    bool ok = r.verified && std::fabs(r.bound - analytic) <= 1e-6;
    checks.push_back({"reduced-311-analytic", ok,
                      "bound " + fmt_double(r.bound) + " vs analytic " + fmt_double(analytic)});
  }
  {
    bool ok = true;
    std::string detail;
    for (auto [n, d, k] : {std::tuple{3, 1, 1}, {3, 2, 2}, {3, 3, 3}}) {
      bvl::BoundReport fu = bvl::full_sdp_bound(n, d, k);
      bvl::BoundReport in = bvl::invariant_sdp_bound(n, d, k);
      if (!(fu.verified && in.verified && fu.bound <= in.bound + 1e-6)) ok = false;
      detail += "(" + std::to_string(n) + "," + std::to_string(d) + "," + std::to_string(k) +
                "): " + fmt_double(fu.bound, 8) + " <= " + fmt_double(in.bound, 8) + "  ";
    }
    checks.push_back({"full-le-reduced", ok, detail});
  }
  {
    bvl::BoundReport r = bvl::invariant_sdp_bound(3, 3, 4);
    auto blocks = bvl::invariant_sdp_blocks(3, 3, 4);
    const int sz = static_cast<int>(blocks[0].size());
    bvl::SymMatrix m(sz);
    for (int i = 0; i < sz; ++i)
      for (int j = 0; j <= i; ++j) {
        double v = 0.0;
        for (size_t b = 0; b < blocks.size(); ++b)
          v += (*r.zonal_certificate)[b] * bvl::to_double(blocks[b][i][j]);
        m.at(i, j) = v;
      }
    double lam = bvl::min_eigenvalue(m);
    bool ok = r.verified && lam >= -1e-6;
    checks.push_back({"reduced-certificate-psd", ok, "min eigenvalue " + fmt_double(lam, 3)});
  }
  {
    bvl::BoundReport l3 = bvl::legendre_bound_optimized(3, 2, 3);
    bvl::BoundReport l4 = bvl::legendre_bound_optimized(3, 2, 4);
    bvl::BoundReport fx = bvl::legendre_bound_fixed(3, 2, 3);
    bool ok = l3.verified && l4.verified && l3.bound <= fx.bound + 1e-6 &&
              l4.bound <= l3.bound + 1e-6;
    checks.push_back({"legendre-opt-chain", ok,
                      fmt_double(l4.bound, 8) + " <= " + fmt_double(l3.bound, 8) + " <= " +
                          fmt_double(fx.bound, 8)});
  }
  return checks;
}

int cmd_verify(const std::string& suite, const std::string& out) {
  std::vector<std::pair<std::string, std::vector<Check> (*)()>> suites = {
      {"moments", verify_moments},
      {"tsp", verify_tsp},
      {"harmonics", verify_harmonics},
      {"sdp", verify_sdp}};
  std::vector<Check> checks;
  bool found = false;
  for (const auto& [name, fn] : suites) {
    if (suite == "all" || suite == name) {
      found = true;
      auto c = fn();
      checks.insert(checks.end(), c.begin(), c.end());
    }
  }
  if (!found) {
    std::cerr << "error: unknown suite '" << suite
              << "' (expected moments, tsp, harmonics, sdp, or all)\n";
    return 1;
  }
  json j{{"suite", suite}, {"version", kVersion}};
  j["checks"] = json::array();
  bool all_pass = true;
  for (const Check& c : checks) {
    all_pass = all_pass && c.pass;
    j["checks"].push_back(
        {{"name", c.name}, {"status", c.pass ? "pass" : "fail"}, {"detail", c.detail}});
  }
  int rc = write_output(out, j.dump(2) + "\n");
  if (rc != 0) return rc;
  return all_pass ? 0 : 3;
}

// ---------------------------------------------------------------------------
// zonal-profile
// ---------------------------------------------------------------------------
int cmd_zonal_profile(int n, int m, int samples, const std::string& out) {
  bvl::ZonalProfileData data;
  try {
    data = bvl::zonal_partial_sum_profile(n, m, samples);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  std::ostringstream os;
  os << "t,eta_m\n";
  for (const auto& [t, v] : data.samples) os << fmt_double(t) << "," << fmt_double(v) << "\n";
  os << "# argmin=" << fmt_double(data.argmin) << " min=" << fmt_double(data.min)
     << " largest_derivative_zero=" << fmt_double(data.largest_derivative_zero) << "\n";
  return write_output(out, os.str());
}

// ---------------------------------------------------------------------------
// membership
// ---------------------------------------------------------------------------
std::optional<bvl::HomogPoly> parse_poly_file(const std::string& path, int n, int degree,
                                              std::string& err) {
  std::ifstream in(path);
  if (!in) {
    err = "cannot open polynomial file: " + path;
    return std::nullopt;
  }
  bvl::HomogPoly p(n, degree);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string ctok;
    if (!(ls >> ctok)) continue;  // blank line
    bvl::Rat c;
    try {
      c = bvl::Rat(ctok);
      c.canonicalize();
    } catch (const std::exception&) {
      err = "line " + std::to_string(lineno) + ": bad coefficient '" + ctok + "'";
      return std::nullopt;
    }
    std::vector<int> e(n);
    for (int i = 0; i < n; ++i) {
      if (!(ls >> e[i])) {
        err = "line " + std::to_string(lineno) + ": expected " + std::to_string(n) +
              " exponents";
        return std::nullopt;
      }
    }
    std::string extra;
    if (ls >> extra) {
      err = "line " + std::to_string(lineno) + ": trailing token '" + extra + "'";
      return std::nullopt;
    }
    bvl::MultiIndex a(std::move(e));
    if (a.degree() != degree) {
      err = "line " + std::to_string(lineno) + ": term degree " +
            std::to_string(a.degree()) + " != " + std::to_string(degree);
      return std::nullopt;
    }
    p.add_term(a, c);
  }
  return p;
}

int cmd_membership(int n, int d, int k, const std::string& poly_path,
                   const std::string& out) {
  std::string err;
  auto p = parse_poly_file(poly_path, n, 2 * d, err);
  if (!p) {
    std::cerr << "error: " << err << "\n";
    return 1;
  }
  bvl::MembershipResult r = bvl::membership_test(*p, k);
  json j{{"command", "membership"},
         {"n", n},
         {"d", d},
         {"k", k},
         {"min_eigenvalue", r.min_eigenvalue},
         {"scale", r.scale}};
  switch (r.verdict) {
    case bvl::Membership::Inside: j["verdict"] = "inside"; break;
    case bvl::Membership::Outside: j["verdict"] = "outside"; break;
    default: j["verdict"] = "borderline"; break;
  }
  if (r.witness) j["witness"] = *r.witness;
  if (r.certified_value) j["certified_value"] = rat_json(*r.certified_value);
  return write_output(out, j.dump(2) + "\n");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectrahedral-approximation scaling bounds for nonnegative-form and "
               "traveling-salesman cones"};
  app.require_subcommand(1);

  // poly-table
  int pt_n = 0, pt_d = 0;
  std::string pt_k, pt_method = "reduced", pt_format = "csv", pt_out;
  bool pt_classical = false;
  auto* pt = app.add_subcommand("poly-table", "Bound table for cones of nonnegative 2d-forms");
  pt->add_option("--n", pt_n, "number of variables")->required();
  pt->add_option("--d", pt_d, "half-degree of the forms")->required();
  pt->add_option("--k", pt_k, "level range a..b")->required();
  pt->add_option("--method", pt_method,
                 "reduced | full | legendre-fixed | legendre-opt | closed-form");
  pt->add_flag("--classical-legendre", pt_classical,
               "use classical Legendre profiles for n != 3 (comparison mode)");
  pt->add_option("--format", pt_format, "csv | json");
  pt->add_option("--output", pt_out, "output path (default stdout)");

  // tsp-bounds
  int tb_n = 0;
  std::string tb_graph, tb_k, tb_format = "csv", tb_out;
  auto* tb = app.add_subcommand("tsp-bounds", "Scaling bounds for TSP cones");
  tb->add_option("--graph", tb_graph, "kn | knn")->required();
  tb->add_option("--n", tb_n, "graph size parameter")->required();
  tb->add_option("--k", tb_k, "level range a..b")->required();
  tb->add_option("--format", tb_format, "csv | json");
  tb->add_option("--output", tb_out, "output path (default stdout)");

  // verify
  std::string vf_suite = "all", vf_out;
  auto* vf = app.add_subcommand("verify", "Run oracle cross-check suites");
  vf->add_option("--suite", vf_suite, "moments | tsp | harmonics | sdp | all");
  vf->add_option("--output", vf_out, "output path (default stdout)");

  // zonal-profile
  int zp_n = 0, zp_m = 0, zp_samples = 0;
  std::string zp_out;
  auto* zp = app.add_subcommand("zonal-profile", "Zonal partial-sum profile figure data");
  zp->add_option("--n", zp_n, "number of variables")->required();
  zp->add_option("--m", zp_m, "partial-sum order")->required();
  zp->add_option("--samples", zp_samples, "grid size over [-1,1]")->required();
  zp->add_option("--output", zp_out, "output path (default stdout)");

  // membership
  int mb_n = 0, mb_d = 0, mb_k = 0;
  std::string mb_poly, mb_out;
  auto* mb = app.add_subcommand("membership", "Spectrahedral membership test for a 2d-form");
  mb->add_option("--n", mb_n, "number of variables")->required();
  mb->add_option("--d", mb_d, "half-degree of the form")->required();
  mb->add_option("--k", mb_k, "approximation level")->required();
  mb->add_option("--poly", mb_poly, "polynomial file (coeff e1 ... en per line)")->required();
  mb->add_option("--output", mb_out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (pt->parsed())
      return cmd_poly_table(pt_n, pt_d, pt_k, pt_method, pt_classical, pt_format, pt_out);
    if (tb->parsed()) return cmd_tsp_bounds(tb_graph, tb_n, tb_k, tb_format, tb_out);
    if (vf->parsed()) return cmd_verify(vf_suite, vf_out);
    if (zp->parsed()) return cmd_zonal_profile(zp_n, zp_m, zp_samples, zp_out);
    if (mb->parsed()) return cmd_membership(mb_n, mb_d, mb_k, mb_poly, mb_out);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
