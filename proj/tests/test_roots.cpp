#include <doctest.h>

#include <cmath>

#include "pdisk/roots.hpp"

using pdisk::RationalPolynomial;

TEST_CASE("sturm counts distinct roots") {
  // (x-1)(x-2)(x+3)
  const RationalPolynomial p =
      RationalPolynomial::linear_factor(1) * RationalPolynomial::linear_factor(2) * RationalPolynomial::linear_factor(-3);
  const pdisk::SturmSequence s(p);
  CHECK(s.count_all() == 3);
  CHECK(s.count(0, 2) == 2);   // (0, 2] includes 2
  CHECK(s.count(1, 2) == 1);
  CHECK(s.count(-10, -3) == 1);
  CHECK(pdisk::SturmSequence(RationalPolynomial({1, 0, 1})).count_all() == 0);
}

TEST_CASE("isolation records multiplicity") {
  const RationalPolynomial p = RationalPolynomial::linear_factor(mpq_class(1, 3)).pow(2) * RationalPolynomial({-2, 0, 1});
  const auto iso = pdisk::isolate_real_roots(p, 1e-12);
  REQUIRE(iso.distinct_count() == 3);
  CHECK(iso.total_count() == 4);
  CHECK(iso.refined[0] == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-12));
  CHECK(iso.intervals[1].multiplicity == 2);
  CHECK(iso.refined[1] == doctest::Approx(1.0 / 3).epsilon(1e-12));
  CHECK(iso.refined[2] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("isolation in a window") {
  const RationalPolynomial p({-2, 0, 1});
  const auto iso = pdisk::isolate_real_roots(p, 0, 10, 1e-10);
  REQUIRE(iso.distinct_count() == 1);
  CHECK(iso.intervals[0].lower < iso.intervals[0].upper);
  CHECK(mpq_class(iso.intervals[0].upper - iso.intervals[0].lower).get_d() <= 1e-10);
}

TEST_CASE("smallest root in a half-open range") {
  const RationalPolynomial p = RationalPolynomial::linear_factor(mpq_class(-1, 3)) * RationalPolynomial::linear_factor(-1);
  auto r = pdisk::smallest_root_in(p, -1, 0, 1e-12);
  REQUIRE(r);
  CHECK(r->lower <= mpq_class(-1, 3));
  CHECK(r->upper >= mpq_class(-1, 3));
  CHECK_FALSE(pdisk::smallest_root_in(RationalPolynomial({1, 0, 1}), -5, 5, 1e-6));
}

TEST_CASE("cauchy bound encloses every root") {
  const RationalPolynomial p({-100, 0, 1});
  CHECK(pdisk::cauchy_root_bound(p) > 10);
}
