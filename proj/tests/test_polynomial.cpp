#include <doctest.h>

#include "pdisk/polynomial.hpp"

using pdisk::RationalPolynomial;

TEST_CASE("canonical form strips trailing zeros") {
  const RationalPolynomial p({1, 2, 0, 0});
  CHECK(p.degree() == 1);
  CHECK(RationalPolynomial({0, 0}).is_zero());
  CHECK(RationalPolynomial().degree() == -1);
  CHECK(p.coefficient(7) == 0);
}

TEST_CASE("arithmetic and evaluation") {
  const RationalPolynomial x = RationalPolynomial::monomial(1, 1);
  const RationalPolynomial p = (x - RationalPolynomial::constant(1)) * (x + RationalPolynomial::constant(2));
  CHECK(p == RationalPolynomial({-2, 1, 1}));
  CHECK(p.evaluate(mpq_class(1, 2)) == mpq_class(-5, 4));
  CHECK(p.evaluate(0.5) == doctest::Approx(-1.25));
  CHECK(p.sign_at(mpq_class(1)) == 0);
  CHECK(p.sign_at(mpq_class(3)) == 1);
  CHECK(p.derivative() == RationalPolynomial({1, 2}));
  CHECK(x.pow(3) == RationalPolynomial::monomial(1, 3));
  CHECK(-p == RationalPolynomial({2, -1, -1}));
}

TEST_CASE("composition") {
  const RationalPolynomial p({1, 0, 1});  // 1 + x^2
  CHECK(p.compose_affine(2, 1) == RationalPolynomial({2, 4, 4}));
  CHECK(p.compose(RationalPolynomial({1, 2})) == p.compose_affine(2, 1));
}

TEST_CASE("division") {
  const RationalPolynomial a({-1, 0, 0, 1});
  const auto [q, r] = a.divmod(RationalPolynomial({-1, 1}));
  CHECK(q == RationalPolynomial({1, 1, 1}));
  CHECK(r.is_zero());
  CHECK_THROWS_AS(a.divmod(RationalPolynomial()), std::domain_error);
  CHECK(RationalPolynomial({2, 4}).monic() == RationalPolynomial({mpq_class(1, 2), 1}));
}

TEST_CASE("multiplicity and deflation") {
  const RationalPolynomial p = RationalPolynomial::linear_factor(-1).pow(3) * RationalPolynomial({1, 1, 1});
  CHECK(p.root_multiplicity(-1) == 3);
  const auto [d, k] = p.deflate(-1);
  CHECK(k == 3);
  CHECK(d == RationalPolynomial({1, 1, 1}));
  CHECK_THROWS(RationalPolynomial().root_multiplicity(0));
}

TEST_CASE("gcd and square-free decomposition") {
  const RationalPolynomial a = RationalPolynomial::linear_factor(1).pow(2) * RationalPolynomial::linear_factor(2);
  const RationalPolynomial b = RationalPolynomial::linear_factor(1) * RationalPolynomial::linear_factor(3);
  CHECK(pdisk::gcd(a, b) == RationalPolynomial::linear_factor(1));

  const RationalPolynomial p = RationalPolynomial::linear_factor(0) * RationalPolynomial::linear_factor(5).pow(3) * mpq_class(7);
  const auto f = pdisk::square_free_decomposition(p);
  REQUIRE(f.size() == 3);
  CHECK(f[0] == RationalPolynomial::linear_factor(0));
  CHECK(f[1] == RationalPolynomial::constant(1));
  CHECK(f[2] == RationalPolynomial::linear_factor(5));
}

TEST_CASE("primitive part keeps the leading sign") {
  const RationalPolynomial p({mpq_class(1, 2), mpq_class(-3, 4)});
  const auto c = pdisk::primitive_part(p);
  REQUIRE(c.size() == 2);
  CHECK(c[0] == 2);
  CHECK(c[1] == -3);
  CHECK(pdisk::from_integer(c) == RationalPolynomial({2, -3}));
  CHECK(RationalPolynomial({3, 0, 1}).has_integer_coefficients());
  CHECK_FALSE(p.has_integer_coefficients());
}

TEST_CASE("to_string") {
  CHECK(RationalPolynomial({0, 0, -16, -16}).to_string("z") == "-16*z^3 - 16*z^2");
}
