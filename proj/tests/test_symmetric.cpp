#include <doctest.h>

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

#include "pdisk/symmetric.hpp"

using namespace pdisk;

namespace {
RationalPolynomial poly(std::initializer_list<mpq_class> c) { return RationalPolynomial(c); }
}  // namespace

TEST_CASE("T polynomials match the interpolated oracle") {
  CHECK(t_polynomial(2, 1) == poly({-4, -4}));
  CHECK(t_polynomial(2, 2) == poly({-2, 0, 2}));
  CHECK(t_polynomial(3, 1) == poly({0, 9, 9}));
  CHECK(t_polynomial(3, 2) == poly({-9, -9}));
  CHECK(t_polynomial(3, 3) == poly({-3, 0, 0, -3}));
  CHECK(t_polynomial(4, 1) == poly({0, 0, -16, -16}));
  CHECK(t_polynomial(4, 2) == poly({8, 32, 24}));
  CHECK(t_polynomial(4, 3) == poly({-16, -16}));
  CHECK(t_polynomial(4, 4) == poly({-4, 0, 0, 0, 4}));
  CHECK(t_polynomial(5, 2) == poly({0, -25, -75, -50}));
  CHECK(t_polynomial(6, 3) == poly({-12, -108, -216, -120}));
  CHECK_THROWS_AS(t_polynomial(4, 0), std::invalid_argument);
  CHECK_THROWS_AS(t_polynomial(1, 1), std::invalid_argument);
}

TEST_CASE("T polynomials have integer coefficients and degree n-m") {
  for (int n = 2; n <= 16; ++n) {
    const auto ts = t_polynomials(n);
    REQUIRE(ts.size() == static_cast<std::size_t>(n));
    for (int m = 1; m < n; ++m) {
      CHECK(ts[static_cast<std::size_t>(m - 1)].has_integer_coefficients());
      CHECK(ts[static_cast<std::size_t>(m - 1)].degree() == n - m);
    }
  }
}

TEST_CASE("A(z) is -Q of the n-gon") {
  for (int n : {3, 5, 8}) {
    const double r = 0.63;
    const HermitianMatrix<double> qa = -a_matrix(n, r * r - 1);
    const auto qb = build_q_matrix(regular_polygon_collection(n, r));
    CHECK((qa - qb).cwiseAbs().maxCoeff() <= 1e-12 * qb.cwiseAbs().maxCoeff());
  }
}

TEST_CASE("circulant spectrum equals the sorted eigenvalues") {
  for (int n : {2, 5, 9, 14}) {
    const double z = -0.27;
    auto t = circulant_spectrum(n, z);
    Eigen::SelfAdjointEigenSolver<HermitianMatrix<double>> es(a_matrix(n, z), Eigen::EigenvaluesOnly);
    std::sort(t.begin(), t.end());
    double scale = 0;
    for (double v : t) scale = std::max(scale, std::abs(v));
    for (int i = 0; i < n; ++i) CHECK(std::abs(es.eigenvalues()(i) - t[static_cast<std::size_t>(i)]) <= 1e-9 * scale);
  }
  CHECK_THROWS_AS(circulant_spectrum(4, -2), std::invalid_argument);
}

TEST_CASE("MPFR log determinant of A(z)") {
  const auto ld = a_matrix_log_determinant(6, 0.37 * 0.37 - 1);
  CHECK_FALSE(ld.singular);
  // det A = (-1)^6 det Q
  CHECK(ld.sign == 1);
  CHECK(ld.log_abs == doctest::Approx(std::log(942.35258885886788547)).epsilon(1e-12));
  CHECK(a_matrix_log_determinant(4, 0).singular);
}

TEST_CASE("positivity by T signs") {
  CHECK(positivity_by_t(3, 0.999));
  CHECK_FALSE(positivity_by_t(3, 1.0));
  CHECK(positivity_by_t(5, mpq_class(7, 10)));
  CHECK_FALSE(positivity_by_t(5, mpq_class(71, 100)));
  CHECK_THROWS_AS(positivity_by_t(3, 0.0), std::invalid_argument);
}

TEST_CASE("determinant factorization") {
  const auto a = det_factorization_check(6, 0.37);
  REQUIRE_FALSE(a.boundary);
  CHECK(a.sign_agrees());
  CHECK(a.sign_formula == 1);
  CHECK(a.log_abs_formula == doctest::Approx(std::log(942.35258885886788547)).epsilon(1e-12));
  CHECK(a.relative_error < 1e-12);

  const auto b = det_factorization_check(2, 1.0);
  CHECK(b.log_abs_formula == doctest::Approx(std::log(8.0)).epsilon(1e-14));
  CHECK(b.sign_agrees());

  for (int n = 2; n <= 16; ++n)
    for (double r : {0.15, 0.99, 1.01, 1.7}) {
      const auto rep = det_factorization_check(n, r);
      if (rep.boundary) continue;
      INFO("n=" << n << " r=" << r);
      CHECK(rep.sign_agrees());
      CHECK(rep.relative_error <= 1e-7);
    }
  CHECK(det_factorization_check(3, 1.0).boundary);
}

TEST_CASE("jacobi link") {
  for (int n = 2; n <= 12; ++n)
    for (int m = 1; m < n; ++m) CHECK(jacobi_link_holds(n, m));
}

TEST_CASE("log_abs of huge rationals") {
  mpz_class big;
  mpz_ui_pow_ui(big.get_mpz_t(), 10, 400);
  CHECK(log_abs(mpq_class(big, 3)) == doctest::Approx(400 * std::log(10.0) - std::log(3.0)));
  CHECK_THROWS(log_abs(mpq_class(0)));
}
