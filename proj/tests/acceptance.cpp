#include <Eigen/Eigenvalues>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "pdisk/core.hpp"
#include "pdisk/orthopoly.hpp"
#include "pdisk/radius.hpp"
#include "pdisk/roots.hpp"
#include "pdisk/symmetric.hpp"
#include "pdisk/triangle.hpp"
#include "pdisk/verify.hpp"

using namespace pdisk;

namespace {

const double kPi = std::acos(-1.0);

struct Result {
  bool ok = true;
  std::string detail;

  void fail(const std::string& what) {
    if (ok) detail = what;
    ok = false;
  }
};

template <typename... Args>
std::string str(const Args&... args) {
  std::ostringstream os;
  os.precision(17);
  (os << ... << args);
  return os.str();
}

double uniform(std::mt19937_64& rng, double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); }

bool pd(const DiskCollection<double>& c) { return is_positive_definite(build_q_matrix(c)).positive(); }

bool outcome_passed(const std::vector<CheckOutcome>& all, const std::string& name, Result& r) {
  for (const auto& o : all)
    if (o.name == name) {
      if (!o.passed()) r.fail(o.suite + "/" + o.name + ": " + o.first_counterexample);
      return o.passed();
    }
  r.fail("missing check " + name);
  return false;
}

// 1. golden radii, abs 1e-12; n = 4 also against the exact root -1/3 and max_uniform_scale (1e-8)
Result golden_radii() {
  Result r;
  const std::vector<std::pair<int, double>> golden{{2, std::sqrt(2.0)}, {3, 1.0}, {4, std::sqrt(2.0 / 3.0)}, {5, std::sqrt(2.0) / 2}};
  for (const auto& [n, want] : golden) {
    const double got = maximal_radius(n).rho;
    if (std::abs(got - want) > 1e-12) r.fail(str("n=", n, " rho=", got, " want ", want));
  }
  const auto h = central_polynomial(4);
  if (h.sign_at(mpq_class(-1, 3)) != 0) r.fail("-1/3 is not a root of the n=4 central polynomial");
  const auto iv = smallest_root_in(h.deflate(-1).first, mpq_class(-1), mpq_class(0), 1e-15);
  if (!iv || !(iv->lower <= mpq_class(-1, 3) && mpq_class(-1, 3) <= iv->upper))
    r.fail("Sturm isolation of the n=4 central root does not contain -1/3");
  const double s = max_uniform_scale(regular_polygon_collection(4, 1.0));
  if (std::abs(s - std::sqrt(2.0 / 3.0)) > 1e-8) r.fail(str("max_uniform_scale n=4: ", s));
  return r;
}

// 2. exact T signs at rho -+ 1e-6, floating LDL at rho -+ 1e-4, n = 3..16
Result boundary_sharpness() {
  Result r;
  for (int n = 3; n <= 16; ++n) {
    const double rho = maximal_radius(n).rho;
    if (!positivity_by_t(n, rho - 1e-6)) r.fail(str("n=", n, " T test negative below rho"));
    if (positivity_by_t(n, rho + 1e-6)) r.fail(str("n=", n, " T test positive above rho"));
    if (!pd(regular_polygon_collection(n, rho - 1e-4))) r.fail(str("n=", n, " LDL rejects rho-1e-4"));
    if (pd(regular_polygon_collection(n, rho + 1e-4))) r.fail(str("n=", n, " LDL accepts rho+1e-4"));
  }
  return r;
}

// 3. log|det Q| by LU vs the closed-form product, rel 1e-7, sign equal; n = 2..16, 5 r per n
Result factorization_identity() {
  Result r;
  std::mt19937_64 rng(3);
  for (int n = 2; n <= 16; ++n)
    for (int k = 0; k < 5; ++k) {
      const double rr = uniform(rng, 0.1, 1.9);
      const auto rep = det_factorization_check(n, rr);
      if (rep.boundary) {
        r.fail(str("n=", n, " r=", rr, " landed on a zero of the product"));
        continue;
      }
      if (!(rep.relative_error <= 1e-7) || !rep.sign_agrees())
        r.fail(str("n=", n, " r=", rr, " rel=", rep.relative_error, " sign ", rep.sign_lu, "/", rep.sign_formula));
    }
  return r;
}

// 4. sorted eigenvalues of A(z) vs sorted T_{n,m}(z), n <= 24, 20 z per n; rel 1e-7 of max |T|
Result spectrum_identity() {
  Result r;
  std::mt19937_64 rng(4);
  for (int n = 2; n <= 24; ++n)
    for (int k = 0; k < 20; ++k) {
      const double z = uniform(rng, -1, 3);
      const auto a = a_matrix(n, z);
      Eigen::SelfAdjointEigenSolver<HermitianMatrix<double>> es(a, Eigen::EigenvaluesOnly);
      std::vector<double> t;
      for (int m = 1; m <= n; ++m) t.push_back(t_polynomial(n, m).evaluate(mpq_class(z)).get_d());
      std::sort(t.begin(), t.end());
      double scale = 0, err = 0;
      for (int i = 0; i < n; ++i) {
        scale = std::max(scale, std::abs(t[static_cast<std::size_t>(i)]));
        err = std::max(err, std::abs(es.eigenvalues()(i) - t[static_cast<std::size_t>(i)]));
      }
      if (err > 1e-7 * scale) r.fail(str("n=", n, " z=", z, " err/scale=", err / scale));
    }
  return r;
}

// 5. exact polynomial identities, n <= 12
Result exact_identities() {
  Result r;
  for (int n = 4; n <= 12; ++n)
    for (const auto& c : v_identity_suite(n))
      if (!c.holds) r.fail(str(c.identity, " n=", c.n, " m=", c.m));
  for (int n = 2; n <= 12; ++n)
    for (int m = 1; m <= n - 1; ++m)
      if (!jacobi_link_holds(n, m)) r.fail(str("jacobi link n=", n, " m=", m));
  const auto suite = run_verification({"orthopoly", 12, 20240611});
  outcome_passed(suite, "alternation", r);
  outcome_passed(suite, "reduction", r);
  return r;
}

// 6. zero structure of V_{n,m}, n <= 12
Result zero_structure() {
  Result r;
  for (int n = 4; n <= 12; ++n)
    for (int m = 2; m <= n - 1; ++m) {
      const auto rep = zero_structure_check(n, m);
      if (!rep.passed())
        r.fail(str("n=", n, " m=", m, " real=", rep.all_real, " count=", rep.count_ok, " location=", rep.location_ok,
                   " multiplicity=", rep.multiplicity_ok, " interlacing=", rep.interlacing_ok));
    }
  return r;
}

// 7. n <= 64: strict decrease, bounds with lower equality only at n = 3 and upper equality only at n = 5,
// beta > 1, rho > sin(pi/n). Equality tolerance 1e-10.
Result bounds_and_monotonicity() {
  Result r;
  double previous = 0;
  for (int n = 2; n <= 64; ++n) {
    const auto res = maximal_radius(n);
    if (n >= 3 && !(res.rho < previous)) r.fail(str("not decreasing at n=", n));
    previous = res.rho;
    if (!(res.beta > 1)) r.fail(str("beta <= 1 at n=", n));
    if (!(res.rho > std::sin(kPi / n))) r.fail(str("rho <= sin(pi/n) at n=", n));
    if (n < 3) continue;
    const auto b = rho_bounds(n);
    const bool lower_eq = std::abs(res.rho - b.lower) <= 1e-10;
    const bool upper_eq = std::isfinite(b.upper) && std::abs(res.rho - b.upper) <= 1e-10;
    if (lower_eq != (n == 3)) r.fail(str("lower bound equality ", lower_eq, " at n=", n, " rho=", res.rho, " lower=", b.lower));
    if (upper_eq != (n == 5)) r.fail(str("upper bound equality ", upper_eq, " at n=", n, " rho=", res.rho, " upper=", b.upper));
    if (!lower_eq && !(res.rho > b.lower)) r.fail(str("below lower bound at n=", n));
    if (!upper_eq && !(res.rho < b.upper)) r.fail(str("above upper bound at n=", n));
  }
  return r;
}

// 8. j11 to 6 decimals; |n rho_n - j11| strictly decreasing over 16..256; rel error < 5% at 256
Result asymptotic() {
  Result r;
  const auto rep = asymptotic_report({16, 32, 64, 128, 256});
  if (std::abs(rep.j11 - 3.831706) > 5e-7) r.fail(str("j11=", rep.j11));
  double last = std::numeric_limits<double>::infinity();
  for (const auto& row : rep.rows) {
    const double err = std::abs(row.n_rho - rep.j11);
    if (!(err < last)) r.fail(str("error not decreasing at n=", row.n));
    last = err;
  }
  if (!(last / rep.j11 < 0.05)) r.fail(str("relative error at 256 = ", last / rep.j11));
  return r;
}

// 9. 10k triangle samples outside a 1e-6 shell agree with the generic test; minors rel 1e-9
Result triangle_criterion() {
  Result r;
  std::mt19937_64 rng(9);
  const double top = std::sqrt(3.0) - 0.05;
  int used = 0;
  while (used < 10000) {
    const double r1 = uniform(rng, 0.05, top), r2 = uniform(rng, 0.05, top), r3 = uniform(rng, 0.05, top);
    if (std::abs(r1 * r1 + r2 * r2 + r3 * r3 - 3) < 1e-6) continue;
    ++used;
    const auto q = build_q_matrix(triangle_collection(r1, r2, r3));
    if (is_positive_definite(q).positive() != triangle_positive(r1, r2, r3))
      r.fail(str("disagreement at R=(", r1, ", ", r2, ", ", r3, ")"));
    const auto closed = triangle_minors(r1 * r1, r2 * r2, r3 * r3);
    const auto numeric = leading_minors(q);
    for (std::size_t i = 0; i < 3; ++i)
      if (std::abs(closed[i] - numeric[i]) > 1e-9 * std::max(std::abs(closed[i]), std::abs(numeric[i])))
        r.fail(str("minor ", i + 1, " at R=(", r1, ", ", r2, ", ", r3, "): ", closed[i], " vs ", numeric[i]));
  }
  return r;
}

// 10. core property suites over 200 seeded collections, n = 2..8
Result property_suites() {
  Result r;
  const auto suite = run_verification({"core", 8, 20240611});
  outcome_passed(suite, "small_radius_positivity", r);
  outcome_passed(suite, "subcollection_closure", r);
  outcome_passed(suite, "radius_monotonicity", r);
  return r;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_s;
    std::function<Result()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "golden radii", 1, golden_radii},
      {2, "boundary sharpness", 10, boundary_sharpness},
      {3, "determinant factorization", 30, factorization_identity},
      {4, "circulant spectrum", 60, spectrum_identity},
      {5, "exact polynomial identities", 60, exact_identities},
      {6, "zero structure", 60, zero_structure},
      {7, "bounds and monotonicity", 300, bounds_and_monotonicity},
      {8, "asymptotic limit", 600, asymptotic},
      {9, "triangle criterion", 30, triangle_criterion},
      {10, "property suites", 60, property_suites},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Result res;
    try {
      res = c.run();
    } catch (const std::exception& e) {
      res.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.budget_s) res.fail(str("took ", secs, " s, budget ", c.budget_s, " s"));
    if (!res.ok) ++failed;
    std::printf("%s %2d %-28s %8.3f s%s%s\n", res.ok ? "PASS" : "FAIL", c.id, c.name, secs, res.ok ? "" : "  ",
                res.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
