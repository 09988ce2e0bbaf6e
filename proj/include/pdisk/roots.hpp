#pragma once

#include <optional>
#include <vector>

#include "pdisk/polynomial.hpp"

namespace pdisk {

struct RootInterval {
  mpq_class lower;
  mpq_class upper;
  int multiplicity = 1;

  /// True when the root is known exactly (lower == upper).
  bool exact() const { return lower == upper; }
  mpq_class midpoint() const { return (lower + upper) / 2; }
};

/// Disjoint isolating intervals for the real roots of a polynomial in a query
/// range, sorted ascending. Each interval holds one distinct root whose
/// multiplicity is recorded; `refined` holds the interval midpoints.
struct RootIsolation {
  std::vector<RootInterval> intervals;
  std::vector<double> refined;

  int distinct_count() const { return static_cast<int>(intervals.size()); }
  int total_count() const;
};

/// Sturm sequence of a square-free polynomial over Z; sign variation counts on
/// half-open intervals (a, b].
class SturmSequence {
 public:
  explicit SturmSequence(const RationalPolynomial& square_free);

  int variations_at(const mpq_class& x) const;
  int variations_at_minus_infinity() const;
  int variations_at_plus_infinity() const;
  /// Number of distinct roots in (a, b].
  int count(const mpq_class& a, const mpq_class& b) const;
  int count_all() const { return variations_at_minus_infinity() - variations_at_plus_infinity(); }
  int sign_at(const mpq_class& x) const;

 private:
  std::vector<IntegerCoefficients> chain_;
};

/// Bound B with every real root inside (-B, B].
mpq_class cauchy_root_bound(const RationalPolynomial& p);

/// Isolates all real roots of p in (lower, upper] and refines every interval
/// to width <= precision. Multiplicities come from an exact square-free
/// decomposition; isolation uses Sturm sequences on each square-free factor.
RootIsolation isolate_real_roots(const RationalPolynomial& p, const mpq_class& lower,
                                 const mpq_class& upper, double precision);
/// Same, over the whole real line.
RootIsolation isolate_real_roots(const RationalPolynomial& p, double precision);

/// Smallest root of p in (lower, upper], isolated by Sturm counting and refined
/// by sign bisection on the square-free part; nullopt when there is none.
/// Multiplicity of the returned interval is that of the root in p.
std::optional<RootInterval> smallest_root_in(const RationalPolynomial& p, const mpq_class& lower,
                                             const mpq_class& upper, double precision);

}  // namespace pdisk
