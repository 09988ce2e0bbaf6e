#include <doctest.h>

#include "pdisk/orthopoly.hpp"

using pdisk::RationalPolynomial;

TEST_CASE("pochhammer and binomial") {
  CHECK(pdisk::pochhammer(3, 0) == 1);
  CHECK(pdisk::pochhammer(3, 3) == 60);
  CHECK(pdisk::pochhammer(-2, 3) == 0);
  CHECK(pdisk::generalized_binomial(5, 2) == 10);
  CHECK(pdisk::generalized_binomial(mpq_class(1, 2), 2) == mpq_class(-1, 8));
}

TEST_CASE("terminating hypergeometric series") {
  // F(-2, b; c; x) has three terms
  const auto t = pdisk::hypergeometric_coefficients(-2, 1, 1);
  REQUIRE(t.size() == 3);
  CHECK(t[1] == -2);
  CHECK(t[2] == 1);
  // (c)_k vanishes at k = 2 before termination
  CHECK_THROWS_AS(pdisk::hypergeometric_coefficients(-3, mpq_class(1, 2), -1), std::domain_error);
}

TEST_CASE("jacobi polynomials") {
  CHECK(pdisk::jacobi_polynomial(0, 0, 0) == RationalPolynomial::constant(1));
  // Legendre P_2 = (3x^2 - 1)/2
  CHECK(pdisk::jacobi_polynomial(2, 0, 0) == RationalPolynomial({mpq_class(-1, 2), 0, mpq_class(3, 2)}));
  // P_1^{a,b} = (a - b)/2 + (a + b + 2) x / 2
  CHECK(pdisk::jacobi_polynomial(1, 1, -1) == RationalPolynomial({1, 1}));
  // P_n^{-1,-1} = ((x^2 - 1)/4) P_{n-2}^{1,1}
  const RationalPolynomial q({mpq_class(-1, 4), 0, mpq_class(1, 4)});
  CHECK(pdisk::jacobi_polynomial(5, -1, -1) == q * pdisk::jacobi_polynomial(3, 1, 1));
}

TEST_CASE("v polynomials") {
  for (int n = 4; n <= 9; ++n)
    for (int m = 1; m <= n - 1; ++m) CHECK(pdisk::v_polynomial(n, m).degree() == m - 1);
  const RationalPolynomial f({0, 0, 0, 1});
  // x * 6x - (n-1) * 3x^2 at n = 4
  CHECK(pdisk::l_operator(f, 4) == RationalPolynomial({0, 0, -3}));
}

TEST_CASE("identity suite holds up to n = 10") {
  for (int n = 4; n <= 10; ++n)
    for (const auto& c : pdisk::v_identity_suite(n)) {
      INFO(c.identity << " n=" << c.n << " m=" << c.m);
      CHECK(c.holds);
    }
}

TEST_CASE("zero structure") {
  for (int n = 4; n <= 9; ++n)
    for (int m = 2; m <= n - 1; ++m) {
      const auto rep = pdisk::zero_structure_check(n, m);
      INFO("n=" << n << " m=" << m);
      CHECK(rep.passed());
    }
}

TEST_CASE("interlacing") {
  const RationalPolynomial outer = RationalPolynomial::linear_factor(0) * RationalPolynomial::linear_factor(2);
  CHECK(pdisk::strictly_interlaced(outer, RationalPolynomial::linear_factor(1)));
  CHECK_FALSE(pdisk::strictly_interlaced(outer, RationalPolynomial::linear_factor(3)));
}
