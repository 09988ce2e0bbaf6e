#include "pdisk/radius.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "pdisk/orthopoly.hpp"
#include "pdisk/roots.hpp"

namespace pdisk {

namespace {

const double kPi = std::acos(-1.0);

}  // namespace

RationalPolynomial central_polynomial(int n) {
  if (n < 2) throw std::invalid_argument("central_polynomial: n must be >= 2");
  const int nu = n / 2;
  const std::vector<mpq_class> t = hypergeometric_coefficients(-nu, mpq_class(nu - n), mpq_class(1 - n));
  std::vector<mpq_class> coeffs(static_cast<std::size_t>(nu) + 1);
  for (std::size_t k = 0; k < t.size(); ++k) coeffs[static_cast<std::size_t>(nu) - k] = k % 2 == 0 ? t[k] : mpq_class(-t[k]);
  return RationalPolynomial(std::move(coeffs));
}

RadiusResult maximal_radius(int n, double precision) {
  if (n < 2) throw std::invalid_argument("maximal_radius: n must be >= 2 (got " + std::to_string(n) + ")");
  if (!(precision > 0)) throw std::invalid_argument("maximal_radius: precision must be positive");
  RadiusResult res;
  res.n = n;
  if (n == 2) {
    res.rho = std::sqrt(2.0);
    res.isolating_interval = {mpq_class(1), mpq_class(1)};
  } else if (n == 3) {
    res.rho = 1;
    res.isolating_interval = {mpq_class(0), mpq_class(0)};
  } else {
    const RationalPolynomial h = central_polynomial(n).deflate(-1).first;
    auto iv = smallest_root_in(h, mpq_class(-1), mpq_class(0), 1e-3);
    if (!iv) throw std::logic_error("maximal_radius: central polynomial has no root in (-1, 0] for n = " +
                                    std::to_string(n));
    while (!iv->exact()) {
      const double lo = iv->lower.get_d();
      const double width = mpq_class(iv->upper - iv->lower).get_d();
      double target = 2 * precision * std::sqrt(std::max(0.0, 1 + lo));
      if (width <= target) break;
      if (target == 0) target = width / 1024;
      iv = smallest_root_in(h, iv->lower, iv->upper, target);
    }
    res.isolating_interval = {iv->lower, iv->upper};
    const mpq_class mid = iv->midpoint();
    res.rho = std::sqrt(mpq_class(mid + 1).get_d());
    res.mu = mid.get_d();
  }
  if (n <= 3) res.mu = n == 2 ? 1 : 0;
  if (n >= 3) {
    const RhoBounds b = rho_bounds(n);
    res.lower_bound = b.lower;
    res.upper_bound = b.upper;
  }
  res.beta = res.rho / std::sin(kPi / n);
  return res;
}

RhoBounds rho_bounds(int n) {
  if (n < 3) throw std::invalid_argument("rho_bounds: n must be >= 3");
  RhoBounds b;
  b.lower = std::sin(kPi / (2.0 * (n / 2)));
  b.upper = n == 3 ? std::numeric_limits<double>::infinity() : std::sin(3 * kPi / (4.0 * ((n + 1) / 2)));
  b.lower_is_equality = n == 3 || n == 5;
  b.upper_is_equality = n == 5;
  return b;
}

long double bessel_j1(long double x) {
  // sum_k (-1)^k (x/2)^{2k+1} / (k! (k+1)!)
  const long double h = x / 2;
  long double term = h;
  long double sum = term;
  for (int k = 1; k < 200; ++k) {
    term *= -h * h / (static_cast<long double>(k) * (k + 1));
    sum += term;
    if (std::fabs(term) < 1e-22L * std::max(1.0L, std::fabs(sum))) break;
  }
  return sum;
}

double bessel_j1_first_zero(double precision) {
  if (!(precision > 0)) throw std::invalid_argument("bessel_j1_first_zero: precision must be positive");
  long double lo = 3, hi = 4.5L;
  if (!(bessel_j1(lo) > 0 && bessel_j1(hi) < 0)) throw std::logic_error("bessel_j1_first_zero: no sign change");
  while (hi - lo > precision) {
    const long double mid = (lo + hi) / 2;
    if (mid <= lo || mid >= hi) break;
    (bessel_j1(mid) > 0 ? lo : hi) = mid;
  }
  return static_cast<double>((lo + hi) / 2);
}

AsymptoticReport asymptotic_report(const std::vector<int>& n_list, double precision) {
  AsymptoticReport rep;
  for (int n : n_list) {
    const RadiusResult r = maximal_radius(n, precision);
    rep.rows.push_back({n, r.rho, n * r.rho, r.beta});
  }
  rep.j11 = bessel_j1_first_zero();
  rep.j11_over_pi = rep.j11 / kPi;
  return rep;
}

}  // namespace pdisk
