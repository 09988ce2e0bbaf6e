#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pdisk/polynomial.hpp"

namespace pdisk {

struct RadiusResult {
  int n = 0;
  double rho = 0;                      ///< maximal radius
  double mu = 0;                       ///< rho^2 - 1
  std::pair<mpq_class, mpq_class> isolating_interval;  ///< mu in (first, second], or exact when equal
  std::optional<double> lower_bound;   ///< sin(pi / (2 floor(n/2))), n >= 3
  std::optional<double> upper_bound;   ///< sin(3 pi / (4 floor((n+1)/2))), n >= 4; +inf at n = 3
  double beta = 0;                     ///< rho / sin(pi / n)
};

/// Central polynomial z^nu F(-nu, nu-n; 1-n; -1/z), nu = floor(n/2), degree nu.
RationalPolynomial central_polynomial(int n);

/// rho_n for the regular n-gon: sqrt(2) for n = 2, 1 for n = 3, and for n >= 4
/// sqrt(1 + mu_n) with mu_n the smallest root other than -1 of the central
/// polynomial. The root is isolated exactly after dividing out (z+1)^k and
/// refined until the rho interval is narrower than precision.
RadiusResult maximal_radius(int n, double precision = 1e-13);

struct RhoBounds {
  double lower = 0;
  double upper = 0;              ///< +inf for n = 3
  bool lower_is_equality = false;  ///< n = 3 and n = 5 (rho_5 = sin(pi/4))
  bool upper_is_equality = false;  ///< only n = 5
};
RhoBounds rho_bounds(int n);

/// J_1 by its power series (long double).
long double bessel_j1(long double x);
/// First positive zero j_{1,1} of J_1 by bisection on [3, 4.5].
double bessel_j1_first_zero(double precision = 1e-15);

struct AsymptoticRow {
  int n = 0;
  double rho = 0;
  double n_rho = 0;
  double beta = 0;
};
struct AsymptoticReport {
  std::vector<AsymptoticRow> rows;
  double j11 = 0;           ///< limit of n rho_n
  double j11_over_pi = 0;   ///< limit of beta_n
};
AsymptoticReport asymptotic_report(const std::vector<int>& n_list, double precision = 1e-13);

}  // namespace pdisk
