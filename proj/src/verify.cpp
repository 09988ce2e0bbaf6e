#include "pdisk/verify.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "pdisk/orthopoly.hpp"
#include "pdisk/radius.hpp"
#include "pdisk/roots.hpp"
#include "pdisk/symmetric.hpp"
#include "pdisk/triangle.hpp"

namespace pdisk {

namespace {

const double kPi = std::acos(-1.0);

struct SuiteLimits {
  int default_n;
  int max_n;
};

const std::map<std::string, SuiteLimits>& limits() {
  static const std::map<std::string, SuiteLimits> table{
      {"core", {8, 12}}, {"symmetric", {12, 24}}, {"orthopoly", {12, 16}}, {"radius", {64, 256}}, {"triangle", {3, 3}}};
  return table;
}

class Recorder {
 public:
  Recorder(std::string suite, std::string name) {
    out_.suite = std::move(suite);
    out_.name = std::move(name);
  }
  void check(bool ok, const std::function<std::string()>& describe) {
    ++out_.cases;
    if (ok) return;
    if (out_.failures++ == 0) out_.first_counterexample = describe();
  }
  CheckOutcome done() { return std::move(out_); }

 private:
  CheckOutcome out_;
};

template <typename... Args>
std::string fmt(const Args&... args) {
  std::ostringstream os;
  os.precision(17);
  (os << ... << args);
  return os.str();
}

std::string describe(const DiskCollection<double>& c) {
  std::ostringstream os;
  os.precision(17);
  for (int i = 0; i < c.size(); ++i)
    os << (i ? "; " : "") << "B(" << c.centers()[static_cast<std::size_t>(i)].real() << "+"
       << c.centers()[static_cast<std::size_t>(i)].imag() << "i, " << c.radii()[static_cast<std::size_t>(i)] << ")";
  return os.str();
}

Verdict verdict_of(const DiskCollection<double>& c) { return is_positive_definite(build_q_matrix(c)).verdict; }

double uniform(std::mt19937_64& rng, double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); }
int uniform_int(std::mt19937_64& rng, int a, int b) { return std::uniform_int_distribution<int>(a, b)(rng); }

RationalPolynomial square_free(const RationalPolynomial& p) { return p.divmod(gcd(p, p.derivative())).first; }

// -------------------------------------------------------------------------
// core

std::vector<CheckOutcome> core_suite(int nmax, std::mt19937_64& rng) {
  Recorder herm("core", "hermitian_by_construction");
  Recorder small("core", "small_radius_positivity");
  Recorder closure("core", "subcollection_closure");
  Recorder shrink("core", "radius_monotonicity");
  Recorder motion("core", "rigid_motion_covariance");
  Recorder scaling("core", "scaling_covariance");

  for (int trial = 0; trial < 200; ++trial) {
    const int n = uniform_int(rng, 2, nmax);
    const auto c = random_admissible_collection(rng, n);
    const auto q = build_q_matrix(c);
    herm.check(q == q.adjoint(), [&] { return describe(c); });

    const auto tiny = c.scaled(1e-3 * min_pairwise_distance(c));
    small.check(verdict_of(tiny) == Verdict::PositiveDefinite, [&] { return describe(tiny); });

    const double s_star = max_uniform_scale(c);
    const auto positive = c.scaled(s_star * uniform(rng, 0.3, 0.95));
    if (verdict_of(positive) != Verdict::PositiveDefinite) {
      closure.check(false, [&] { return "scaled below the maximal scale but not positive: " + describe(positive); });
      continue;
    }
    std::vector<int> subset;
    while (subset.empty()) {
      subset.clear();
      for (int i = 0; i < n; ++i)
        if (uniform(rng, 0, 1) < 0.5) subset.push_back(i);
    }
    const auto sub = positive.subcollection(subset);
    closure.check(verdict_of(sub) == Verdict::PositiveDefinite, [&] { return describe(sub); });

    std::vector<double> radii = positive.radii();
    for (auto& r : radii) r *= uniform(rng, 0.05, 1.0);
    const auto smaller = positive.with_radii(radii);
    shrink.check(verdict_of(smaller) == Verdict::PositiveDefinite, [&] { return describe(smaller); });

    const double f = uniform(rng, 0, 1) < 0.5 ? uniform(rng, 0.5, 0.95) : uniform(rng, 1.05, 1.5);
    const auto probe = c.scaled(s_star * f);
    const double theta = uniform(rng, 0, 2 * kPi);
    const auto moved = probe.transformed(std::polar(1.0, theta), {uniform(rng, -3, 3), uniform(rng, -3, 3)});
    const Verdict v0 = verdict_of(probe), v1 = verdict_of(moved);
    motion.check(v0 == v1 && v0 != Verdict::Indeterminate, [&] { return describe(probe); });

    const double t = uniform(rng, 0.2, 3.0);
    const auto dilated = probe.transformed({t, 0}, {0, 0});
    const auto qd = build_q_matrix(dilated);
    const auto qp = build_q_matrix(probe);
    const double factor = std::pow(t, 2 * n);
    const double err = (qd - qp * factor).cwiseAbs().maxCoeff() / (qd.cwiseAbs().maxCoeff());
    scaling.check(err < 1e-10 && verdict_of(dilated) == v0, [&] { return fmt("t=", t, " err=", err, " ", describe(probe)); });
  }
  return {herm.done(), small.done(), closure.done(), shrink.done(), motion.done(), scaling.done()};
}

// -------------------------------------------------------------------------
// symmetric

std::vector<CheckOutcome> symmetric_suite(int nmax, std::mt19937_64& rng) {
  Recorder integer("symmetric", "integer_coefficients");
  Recorder spectrum("symmetric", "spectrum_identity");
  Recorder product("symmetric", "product_identity");
  Recorder consistency("symmetric", "consistency_with_core");
  Recorder link("symmetric", "jacobi_link");
  Recorder det("symmetric", "determinant_factorization");

  for (int n = 2; n <= nmax; ++n) {
    const auto ts = t_polynomials(n);
    for (int m = 1; m <= n; ++m) {
      const auto& t = ts[static_cast<std::size_t>(m - 1)];
      integer.check(t.has_integer_coefficients() && t.degree() == (m == n ? n : n - m),
                    [&] { return fmt("n=", n, " m=", m, " T=", t.to_string("z")); });
    }
    for (int trial = 0; trial < 20; ++trial) {
      const double z = uniform(rng, -1, 3);
      const auto a = a_matrix(n, z);
      Eigen::SelfAdjointEigenSolver<HermitianMatrix<double>> es(a, Eigen::EigenvaluesOnly);
      std::vector<double> eig(es.eigenvalues().data(), es.eigenvalues().data() + n);
      std::vector<double> tv = circulant_spectrum(n, z);
      std::sort(tv.begin(), tv.end());
      double scale = 1;
      for (double v : tv) scale = std::max(scale, std::abs(v));
      double err = 0;
      for (int i = 0; i < n; ++i) err = std::max(err, std::abs(eig[static_cast<std::size_t>(i)] - tv[static_cast<std::size_t>(i)]));
      spectrum.check(err <= 1e-7 * scale, [&] { return fmt("n=", n, " z=", z, " err/scale=", err / scale); });

      const LogDeterminant ld = a_matrix_log_determinant(n, z);
      double log_t = 0;
      int sign_t = 1;
      for (double v : tv) {
        log_t += std::log(std::abs(v));
        sign_t *= v < 0 ? -1 : 1;
      }
      const double rel = std::abs(ld.log_abs - log_t) / std::max(std::abs(log_t), 1.0);
      product.check(!ld.singular && rel <= 1e-7 && ld.sign == sign_t,
                    [&] { return fmt("n=", n, " z=", z, " rel=", rel); });
    }
    const double r = uniform(rng, 0.1, 1.9);
    const HermitianMatrix<double> qa = -a_matrix(n, r * r - 1);
    const auto qb = build_q_matrix(regular_polygon_collection(n, r));
    const double err = (qa - qb).cwiseAbs().maxCoeff() / std::max(qb.cwiseAbs().maxCoeff(), 1.0);
    consistency.check(err <= 1e-10, [&] { return fmt("n=", n, " r=", r, " err=", err); });

    for (int m = 1; m <= n - 1; ++m) link.check(jacobi_link_holds(n, m), [&] { return fmt("n=", n, " m=", m); });

    for (int trial = 0; trial < 5; ++trial) {
      const double rr = uniform(rng, 0.1, 1.9);
      const auto rep = det_factorization_check(n, rr);
      if (rep.boundary) continue;
      det.check(rep.relative_error <= 1e-7 && rep.sign_agrees(),
                [&] { return fmt("n=", n, " r=", rr, " rel=", rep.relative_error); });
    }
  }
  return {integer.done(), spectrum.done(), product.done(), consistency.done(), link.done(), det.done()};
}

// -------------------------------------------------------------------------
// orthopoly

std::vector<double> descending_roots(const RationalPolynomial& p) {
  const auto iso = isolate_real_roots(p, 1e-14);
  std::vector<double> out;
  for (std::size_t i = 0; i < iso.intervals.size(); ++i)
    for (int k = 0; k < iso.intervals[i].multiplicity; ++k) out.push_back(iso.refined[i]);
  std::sort(out.rbegin(), out.rend());
  return out;
}

std::vector<CheckOutcome> orthopoly_suite(int nmax, std::mt19937_64& rng) {
  Recorder vid("orthopoly", "v_identities");
  Recorder alt("orthopoly", "alternation");
  Recorder magn("orthopoly", "reduction");
  Recorder ultra("orthopoly", "ultraspherical_reduction");
  Recorder zeros("orthopoly", "zero_structure");
  Recorder sturm("orthopoly", "sturm_vs_companion");
  Recorder markov("orthopoly", "markov_monotonicity");
  Recorder stieltjes("orthopoly", "stieltjes_monotonicity");

  for (int n = 4; n <= nmax; ++n)
    for (const auto& c : v_identity_suite(n))
      vid.check(c.holds, [&] { return fmt(c.identity, " n=", c.n, " m=", c.m); });

  const std::vector<mpq_class> params{mpq_class(-1), mpq_class(0), mpq_class(1, 2), mpq_class(1)};
  for (int k = 0; k <= 8; ++k)
    for (const auto& a : params)
      for (const auto& b : params) {
        try {
          const auto lhs = jacobi_polynomial(k, a, b);
          auto rhs = jacobi_polynomial(k, b, a).compose_affine(-1, 0);
          if (k % 2) rhs = -rhs;
          alt.check(lhs == rhs, [&] { return fmt("k=", k, " alpha=", a.get_str(), " beta=", b.get_str()); });
        } catch (const std::domain_error&) {
          // undefined on the degenerate parameter lines
        }
      }

  const RationalPolynomial half_x_minus_1({mpq_class(-1, 2), mpq_class(1, 2)});
  const RationalPolynomial quarter_x2_minus_1({mpq_class(-1, 4), mpq_class(0), mpq_class(1, 4)});
  for (int n = 2; n <= nmax; ++n) {
    const auto lhs = jacobi_polynomial(n, -1, -1) * mpq_class(n);
    const auto rhs = half_x_minus_1 * jacobi_polynomial(n - 1, 1, -1) * mpq_class(n - 1);
    magn.check(lhs == rhs, [&] { return fmt("n=", n); });
    const auto u = quarter_x2_minus_1 * jacobi_polynomial(n - 2, 1, 1);
    ultra.check(jacobi_polynomial(n, -1, -1) == u, [&] { return fmt("n=", n); });
  }

  for (int n = 4; n <= nmax; ++n)
    for (int m = 2; m <= n - 1; ++m) {
      const auto rep = zero_structure_check(n, m);
      zeros.check(rep.passed(), [&] {
        return fmt("n=", n, " m=", m, " real=", rep.all_real, " count=", rep.count_ok, " location=", rep.location_ok,
                   " multiplicity=", rep.multiplicity_ok, " interlacing=", rep.interlacing_ok);
      });
    }

  for (int trial = 0; trial < 100; ++trial) {
    const int deg = uniform_int(rng, 1, 12);
    std::vector<mpq_class> coeffs;
    for (int i = 0; i <= deg; ++i) coeffs.emplace_back(uniform_int(rng, -10, 10));
    if (sgn(coeffs.back()) == 0) coeffs.back() = 1;
    const RationalPolynomial p(coeffs);
    const auto iso = isolate_real_roots(p, 1e-12);
    std::vector<double> exact;
    for (std::size_t i = 0; i < iso.intervals.size(); ++i)
      for (int k = 0; k < iso.intervals[i].multiplicity; ++k) exact.push_back(iso.refined[i]);

    const int d = p.degree();
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(d, d);
    for (int i = 1; i < d; ++i) comp(i, i - 1) = 1;
    for (int i = 0; i < d; ++i) comp(i, d - 1) = -mpq_class(p.coefficient(i) / p.leading()).get_d();
    Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
    std::vector<double> numeric;
    for (int i = 0; i < d; ++i) {
      const auto ev = es.eigenvalues()(i);
      if (std::abs(ev.imag()) <= 1e-6 * std::max(1.0, std::abs(ev))) numeric.push_back(ev.real());
    }
    std::sort(numeric.begin(), numeric.end());
    bool ok = numeric.size() == exact.size();
    for (std::size_t i = 0; ok && i < exact.size(); ++i) ok = std::abs(numeric[i] - exact[i]) <= 1e-6 * std::max(1.0, std::abs(exact[i]));
    sturm.check(ok, [&] { return fmt("p=", p.to_string(), " sturm=", exact.size(), " companion=", numeric.size()); });
  }

  for (int n = 2; n <= 10; ++n) {
    const auto cheb = descending_roots(jacobi_polynomial(n, mpq_class(-1, 2), mpq_class(-1, 2)));
    const auto other = descending_roots(jacobi_polynomial(n, -1, 0));
    markov.check(cheb.size() == static_cast<std::size_t>(n) && other.size() == static_cast<std::size_t>(n) &&
                     cheb[1] < other[1],
                 [&] { return fmt("n=", n); });
  }
  for (int n = 1; n <= 10; ++n) {
    std::vector<std::vector<double>> positive;
    for (const mpq_class& a : {mpq_class(-1, 2), mpq_class(0), mpq_class(1, 2)}) {
      std::vector<double> r;
      for (double x : descending_roots(jacobi_polynomial(n, a, a)))
        if (x > 1e-12) r.push_back(x);
      positive.push_back(r);
    }
    bool ok = positive[0].size() == positive[1].size() && positive[1].size() == positive[2].size();
    for (std::size_t i = 0; ok && i < positive[0].size(); ++i)
      ok = positive[0][i] > positive[1][i] && positive[1][i] > positive[2][i];
    stieltjes.check(ok, [&] { return fmt("n=", n); });
  }
  return {vid.done(), alt.done(), magn.done(), ultra.done(), zeros.done(), sturm.done(), markov.done(), stieltjes.done()};
}

// -------------------------------------------------------------------------
// radius

std::vector<CheckOutcome> radius_suite(int nmax) {
  Recorder mono("radius", "monotonicity");
  Recorder bounds("radius", "two_sided_bounds");
  Recorder beta("radius", "beta_exceeds_one");
  Recorder sine("radius", "rho_exceeds_sine");
  Recorder central("radius", "central_polynomial_agreement");
  Recorder brute("radius", "brute_force_agreement");
  Recorder trend("radius", "mehler_heine_trend");

  std::vector<RadiusResult> rs;
  for (int n = 2; n <= nmax; ++n) rs.push_back(maximal_radius(n));
  for (std::size_t i = 1; i < rs.size(); ++i)
    mono.check(rs[i].rho < rs[i - 1].rho, [&] { return fmt("n=", rs[i].n); });
  for (const auto& r : rs) {
    const int n = r.n;
    beta.check(r.beta > 1, [&] { return fmt("n=", n, " beta=", r.beta); });
    sine.check(r.rho > std::sin(kPi / n), [&] { return fmt("n=", n); });
    if (n >= 3) {
      const auto b = rho_bounds(n);
      const bool lower_ok = b.lower_is_equality ? std::abs(r.rho - b.lower) <= 1e-10 : r.rho > b.lower + 1e-10;
      const bool upper_ok = n == 3 || (b.upper_is_equality ? std::abs(r.rho - b.upper) <= 1e-10 : r.rho < b.upper - 1e-10);
      bounds.check(lower_ok && upper_ok,
                   [&] { return fmt("n=", n, " rho=", r.rho, " bounds=(", b.lower, ", ", b.upper, ")"); });
    }
    if (n >= 4) {
      const int nu = n / 2;
      const auto& [lo, hi] = r.isolating_interval;
      for (int m : {n - nu, nu}) {
        const auto sf = square_free(t_polynomial(n, m));
        const bool has = lo == hi ? sf.sign_at(lo) == 0 : SturmSequence(sf).count(lo, hi) == 1;
        central.check(has, [&] { return fmt("n=", n, " m=", m); });
      }
    }
    if (n <= 10) {
      const double s = max_uniform_scale(regular_polygon_collection(n, 1.0));
      brute.check(std::abs(s - r.rho) < 1e-8, [&] { return fmt("n=", n, " scale=", s, " rho=", r.rho); });
    }
  }
  const double j11 = bessel_j1_first_zero();
  double last = std::numeric_limits<double>::infinity();
  int last_n = 0;
  for (int n : {16, 32, 64, 128, 256}) {
    if (n > nmax) break;
    const double err = std::abs(n * maximal_radius(n).rho - j11);
    trend.check(err < last, [&] { return fmt("n=", n, " error=", err, " previous=", last); });
    last = err;
    last_n = n;
  }
  if (last_n == 256) trend.check(last / j11 < 0.05, [&] { return fmt("relative error at 256 = ", last / j11); });
  return {mono.done(), bounds.done(), beta.done(), sine.done(), central.done(), brute.done(), trend.done()};
}

// -------------------------------------------------------------------------
// triangle

std::vector<CheckOutcome> triangle_suite(std::mt19937_64& rng) {
  Recorder equiv("triangle", "criterion_equivalence");
  Recorder minors("triangle", "minor_consistency");
  Recorder phi("triangle", "phi_symmetry");
  Recorder reduce("triangle", "symmetric_reduction");

  const double top = std::sqrt(3.0) - 0.05;
  for (int trial = 0; trial < 10000; ++trial) {
    const double r1 = uniform(rng, 0.05, top), r2 = uniform(rng, 0.05, top), r3 = uniform(rng, 0.05, top);
    const double sum = r1 * r1 + r2 * r2 + r3 * r3;
    if (std::abs(sum - 3) < 1e-6) continue;
    const auto q = build_q_matrix(triangle_collection(r1, r2, r3));
    const bool generic = is_positive_definite(q).positive();
    equiv.check(generic == triangle_positive(r1, r2, r3), [&] { return fmt("R=(", r1, ", ", r2, ", ", r3, ")"); });
    if (trial % 20 == 0) {
      const auto closed = triangle_minors(r1 * r1, r2 * r2, r3 * r3);
      const auto numeric = leading_minors(q);
      bool ok = true;
      for (std::size_t i = 0; i < 3; ++i)
        ok = ok && std::abs(closed[i] - numeric[i]) <= 1e-9 * std::max(std::abs(closed[i]), std::abs(numeric[i]));
      minors.check(ok, [&] { return fmt("R=(", r1, ", ", r2, ", ", r3, ")"); });
    }
  }
  phi.check(phi_reflection_symmetric(), [] { return std::string("phi(3-x) != phi(x)"); });
  phi.check(phi_edge_factorizes(), [] { return std::string("phi(x1,x2,0) != (3-x1)(3-x2)"); });
  for (int i = 1; i < 173; ++i) {
    const double r = i / 100.0;
    reduce.check(triangle_positive(r, r, r) == (r < 1), [&] { return fmt("r=", r); });
  }
  return {equiv.done(), minors.done(), phi.done(), reduce.done()};
}

}  // namespace

const std::vector<std::string>& verification_suites() {
  static const std::vector<std::string> names{"core", "symmetric", "orthopoly", "radius", "triangle"};
  return names;
}

int default_nmax(const std::string& suite) {
  const auto it = limits().find(suite);
  if (it == limits().end()) throw std::invalid_argument("unknown suite '" + suite + "'");
  return it->second.default_n;
}

int max_nmax(const std::string& suite) {
  const auto it = limits().find(suite);
  if (it == limits().end()) throw std::invalid_argument("unknown suite '" + suite + "'");
  return it->second.max_n;
}

std::vector<CheckOutcome> run_verification(const VerifyOptions& options) {
  std::vector<std::string> suites;
  if (options.suite == "all")
    suites = verification_suites();
  else if (limits().count(options.suite))
    suites = {options.suite};
  else
    throw std::invalid_argument("unknown suite '" + options.suite + "'");

  std::vector<CheckOutcome> out;
  for (const auto& s : suites) {
    int nmax = options.nmax == 0 ? default_nmax(s) : std::min(options.nmax, max_nmax(s));
    if (options.nmax != 0 && options.suite != "all" && options.nmax > max_nmax(s))
      throw std::invalid_argument("nmax " + std::to_string(options.nmax) + " exceeds the limit " +
                                  std::to_string(max_nmax(s)) + " of suite '" + s + "'");
    const int floor = s == "orthopoly" ? 4 : 2;
    if (s != "triangle" && nmax < floor)
      throw std::invalid_argument("nmax must be at least " + std::to_string(floor) + " for suite '" + s + "'");
    // each suite draws from its own stream so results do not depend on which suites ran before
    const auto index = static_cast<std::uint64_t>(
        std::find(verification_suites().begin(), verification_suites().end(), s) - verification_suites().begin());
    std::mt19937_64 rng(options.seed + 0x9E3779B97F4A7C15ULL * (index + 1));
    std::vector<CheckOutcome> part;
    if (s == "core")
      part = core_suite(nmax, rng);
    else if (s == "symmetric")
      part = symmetric_suite(nmax, rng);
    else if (s == "orthopoly")
      part = orthopoly_suite(nmax, rng);
    else if (s == "radius")
      part = radius_suite(nmax);
    else
      part = triangle_suite(rng);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

DiskCollection<double> random_admissible_collection(std::mt19937_64& rng, int n, double min_separation) {
  if (n < 1) throw std::invalid_argument("random_admissible_collection: n must be positive");
  std::vector<std::complex<double>> centers;
  int attempts = 0;
  while (static_cast<int>(centers.size()) < n) {
    if (++attempts > 100000) throw std::runtime_error("random_admissible_collection: cannot place centers");
    const std::complex<double> a(uniform(rng, 0, 1), uniform(rng, 0, 1));
    if (std::all_of(centers.begin(), centers.end(), [&](const auto& b) { return std::abs(a - b) >= min_separation; }))
      centers.push_back(a);
  }
  std::vector<double> radii(static_cast<std::size_t>(n), 1.0);
  const DiskCollection<double> unit(centers, radii);
  for (int k = 0; k < n; ++k) {
    const double d = n == 1 ? 1.0 : unit.nearest_center_distance(k);
    radii[static_cast<std::size_t>(k)] = uniform(rng, 0.05, 0.95) * d;
  }
  return DiskCollection<double>(std::move(centers), std::move(radii));
}

double min_pairwise_distance(const DiskCollection<double>& c) {
  double best = std::numeric_limits<double>::infinity();
  for (int k = 0; k < c.size(); ++k) best = std::min(best, c.nearest_center_distance(k));
  return best;
}

std::vector<double> leading_minors(const HermitianMatrix<double>& m) {
  std::vector<double> out;
  for (Eigen::Index k = 1; k <= m.rows(); ++k) {
    const HermitianMatrix<double> block = m.topLeftCorner(k, k);
    out.push_back(Eigen::PartialPivLU<HermitianMatrix<double>>(block).determinant().real());
  }
  return out;
}

}  // namespace pdisk
