#include <doctest.h>

#include <cmath>

#include "pdisk/radius.hpp"

using namespace pdisk;

TEST_CASE("maximal radius against the brute-force oracle") {
  const double oracle[] = {1.4142135623730950488, 1.0, 0.81649658092772603273, 0.7071067811865475244,
                           0.59586158268651805253, 0.52573111211913360603, 0.46080422984077841901,
                           0.41553960659125073117, 0.37384470618664717445};
  for (int n = 2; n <= 10; ++n) {
    INFO("n=" << n);
    CHECK(std::abs(maximal_radius(n).rho - oracle[n - 2]) <= 1e-12);
  }
}

TEST_CASE("n = 4 root is exactly -1/3") {
  const auto h = central_polynomial(4);
  CHECK(h.sign_at(mpq_class(-1, 3)) == 0);
  const auto r = maximal_radius(4);
  CHECK(r.isolating_interval.first <= mpq_class(-1, 3));
  CHECK(r.isolating_interval.second >= mpq_class(-1, 3));
  CHECK(r.mu == doctest::Approx(-1.0 / 3).epsilon(1e-12));
}

TEST_CASE("small cases are exact") {
  const auto two = maximal_radius(2);
  CHECK(two.mu == 1);
  CHECK_FALSE(two.lower_bound);
  const auto three = maximal_radius(3);
  CHECK(three.rho == 1);
  CHECK(three.isolating_interval.first == 0);
  CHECK(std::isinf(*three.upper_bound));
  CHECK_THROWS_AS(maximal_radius(1), std::invalid_argument);
}

TEST_CASE("central polynomial degree") {
  for (int n = 2; n <= 20; ++n) CHECK(central_polynomial(n).degree() == n / 2);
}

TEST_CASE("bounds") {
  const auto b5 = rho_bounds(5);
  CHECK(b5.lower == doctest::Approx(std::sqrt(2.0) / 2));
  CHECK(b5.upper == doctest::Approx(std::sqrt(2.0) / 2));
  CHECK(b5.lower_is_equality);
  CHECK(b5.upper_is_equality);
  for (int n = 6; n <= 40; ++n) {
    const auto r = maximal_radius(n);
    CHECK(r.rho > *r.lower_bound);
    CHECK(r.rho < *r.upper_bound);
    CHECK(r.beta > 1);
  }
}

TEST_CASE("bessel zero") {
  CHECK(bessel_j1(0) == 0);
  CHECK(static_cast<double>(bessel_j1(1)) == doctest::Approx(0.44005058574493351596).epsilon(1e-15));
  CHECK(bessel_j1_first_zero() == doctest::Approx(3.831705970207512315614436).epsilon(1e-14));
}

TEST_CASE("asymptotic report") {
  const auto rep = asymptotic_report({16, 32, 64});
  REQUIRE(rep.rows.size() == 3);
  CHECK(rep.j11_over_pi == doctest::Approx(1.2196698912665044549).epsilon(1e-14));
  CHECK(std::abs(rep.rows[2].n_rho - rep.j11) < std::abs(rep.rows[0].n_rho - rep.j11));
  CHECK(rep.rows[1].n_rho == doctest::Approx(32 * rep.rows[1].rho));
}
