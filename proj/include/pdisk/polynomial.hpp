#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace pdisk {

/// Dense univariate polynomial with exact rational coefficients.
///
/// Coefficients are indexed by degree and kept canonical: trailing zeros are
/// stripped, so the zero polynomial has no coefficients and degree -1.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<mpq_class> coefficients);
  RationalPolynomial(std::initializer_list<mpq_class> coefficients);

  static RationalPolynomial constant(const mpq_class& c);
  static RationalPolynomial monomial(const mpq_class& c, int degree);
  /// p(x) = x - root
  static RationalPolynomial linear_factor(const mpq_class& root);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of x^k; zero outside the stored range.
  mpq_class coefficient(int k) const;
  const mpq_class& leading() const { return coeffs_.back(); }
  const std::vector<mpq_class>& coefficients() const { return coeffs_; }

  RationalPolynomial& operator+=(const RationalPolynomial& rhs);
  RationalPolynomial& operator-=(const RationalPolynomial& rhs);
  RationalPolynomial& operator*=(const RationalPolynomial& rhs);
  RationalPolynomial& operator*=(const mpq_class& s);

  friend RationalPolynomial operator+(RationalPolynomial lhs, const RationalPolynomial& rhs) {
    return lhs += rhs;
  }
  friend RationalPolynomial operator-(RationalPolynomial lhs, const RationalPolynomial& rhs) {
    return lhs -= rhs;
  }
  friend RationalPolynomial operator*(RationalPolynomial lhs, const RationalPolynomial& rhs) {
    return lhs *= rhs;
  }
  friend RationalPolynomial operator*(RationalPolynomial lhs, const mpq_class& s) { return lhs *= s; }
  friend RationalPolynomial operator*(const mpq_class& s, RationalPolynomial rhs) { return rhs *= s; }
  RationalPolynomial operator-() const;

  friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  RationalPolynomial derivative() const;
  RationalPolynomial pow(int k) const;
  /// p(a*x + b), computed as an exact coefficient transform.
  RationalPolynomial compose_affine(const mpq_class& a, const mpq_class& b) const;
  /// Generic composition p(q(x)).
  RationalPolynomial compose(const RationalPolynomial& inner) const;

  /// Exact Euclidean division; throws std::domain_error on a zero divisor.
  std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& divisor) const;
  /// Monic copy (the zero polynomial stays zero).
  RationalPolynomial monic() const;

  mpq_class evaluate(const mpq_class& x) const;
  double evaluate(double x) const;
  /// Sign of p(x) in {-1, 0, 1}.
  int sign_at(const mpq_class& x) const;

  bool has_integer_coefficients() const;
  /// Largest k with (x - root)^k dividing p. The zero polynomial throws.
  int root_multiplicity(const mpq_class& root) const;
  /// p / (x - root)^k for the maximal k; returns {quotient, k}.
  std::pair<RationalPolynomial, int> deflate(const mpq_class& root) const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void normalize();
  std::vector<mpq_class> coeffs_;
};

/// Integer polynomial used by the root and gcd machinery. Index = degree.
using IntegerCoefficients = std::vector<mpz_class>;

/// Clears denominators and divides by the content; the leading coefficient
/// keeps the sign of p's leading coefficient.
IntegerCoefficients primitive_part(const RationalPolynomial& p);
RationalPolynomial from_integer(const IntegerCoefficients& c);

/// Monic gcd over Q, computed with a primitive pseudo-remainder sequence.
RationalPolynomial gcd(const RationalPolynomial& a, const RationalPolynomial& b);

/// Yun square-free decomposition: p = lc * prod_i factors[i-1]^i, where each
/// factor is square-free, monic, and pairwise coprime. Constant factors are
/// returned as the zero-degree polynomial 1 so the index stays the multiplicity.
std::vector<RationalPolynomial> square_free_decomposition(const RationalPolynomial& p);

}  // namespace pdisk
