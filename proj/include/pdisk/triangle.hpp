#pragma once

#include <array>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

#include "pdisk/core.hpp"

namespace pdisk {

/// Three disks at the cube roots of unity with radii R1, R2, R3: positive iff
/// R1^2 + R2^2 + R3^2 < 3 (strict). Throws std::invalid_argument naming the
/// disk when a radius is not in (0, sqrt 3).
bool triangle_positive(double r1, double r2, double r3);

struct TriangleVerdict {
  bool positive = false;
  bool near_boundary = false;  ///< |R1^2 + R2^2 + R3^2 - 3| <= 1e-12
  double radius_square_sum = 0;
};
TriangleVerdict triangle_verdict(double r1, double r2, double r3);

/// The collection {B(w^j, R_j)}, j = 1, 2, 3, used by the minor formulas.
DiskCollection<double> triangle_collection(double r1, double r2, double r3);

namespace detail {
template <typename T>
void check_triangle_squares(const T& x1, const T& x2, const T& x3) {
  const std::array<T, 3> xs{x1, x2, x3};
  for (int i = 0; i < 3; ++i)
    if (!(xs[static_cast<std::size_t>(i)] > 0 && xs[static_cast<std::size_t>(i)] < 3))
      throw std::invalid_argument("triangle: x" + std::to_string(i + 1) + " = R^2 must lie in (0, 3)");
}
}  // namespace detail

/// phi = 9 + x1 x2 + x2 x3 + x1 x3 - 3 (x1 + x2 + x3)
template <typename T>
T triangle_phi(const T& x1, const T& x2, const T& x3) {
  return T(9) + x1 * x2 + x2 * x3 + x1 * x3 - T(3) * (x1 + x2 + x3);
}

/// Leading principal minors of Q in terms of x_i = R_i^2:
///   d1 = x1 (3 - x2)(3 - x3)
///   d2 = 3 q [(3 - p) x3^2 - x3 (18 + q - 6p) + 9 (3 - p)],  p = x1 + x2, q = x1 x2
///   d3 = 27 x1 x2 x3 (3 - x1 - x2 - x3) phi(x)
template <typename T>
std::array<T, 3> triangle_minors(const T& x1, const T& x2, const T& x3) {
  detail::check_triangle_squares(x1, x2, x3);
  const T p = x1 + x2;
  const T q = x1 * x2;
  const T d1 = x1 * (T(3) - x2) * (T(3) - x3);
  const T d2 = T(3) * q * ((T(3) - p) * x3 * x3 - x3 * (T(18) + q - T(6) * p) + T(9) * (T(3) - p));
  const T d3 = T(27) * x1 * x2 * x3 * (T(3) - x1 - x2 - x3) * triangle_phi(x1, x2, x3);
  return {d1, d2, d3};
}

/// Sparse exact polynomial in x1, x2, x3.
class TrivariatePolynomial {
 public:
  using Exponent = std::array<int, 3>;

  TrivariatePolynomial() = default;
  TrivariatePolynomial(int c) { add_term({0, 0, 0}, c); }  // NOLINT
  static TrivariatePolynomial constant(const mpq_class& c);
  static TrivariatePolynomial variable(int i);

  friend TrivariatePolynomial operator+(const TrivariatePolynomial& a, const TrivariatePolynomial& b);
  friend TrivariatePolynomial operator-(const TrivariatePolynomial& a, const TrivariatePolynomial& b);
  friend TrivariatePolynomial operator*(const TrivariatePolynomial& a, const TrivariatePolynomial& b);
  friend bool operator==(const TrivariatePolynomial& a, const TrivariatePolynomial& b) { return a.terms_ == b.terms_; }

  /// Substitutes x_i -> images[i] (each a trivariate polynomial).
  TrivariatePolynomial substitute(const std::array<TrivariatePolynomial, 3>& images) const;
  mpq_class evaluate(const mpq_class& x1, const mpq_class& x2, const mpq_class& x3) const;
  const std::map<Exponent, mpq_class>& terms() const { return terms_; }

 private:
  void add_term(const Exponent& e, const mpq_class& c);
  std::map<Exponent, mpq_class> terms_;
};

TrivariatePolynomial phi_polynomial();
/// phi(3 - x1, 3 - x2, 3 - x3) == phi(x1, x2, x3), coefficientwise.
bool phi_reflection_symmetric();
/// phi(x1, x2, 0) == (3 - x1)(3 - x2), coefficientwise.
bool phi_edge_factorizes();

}  // namespace pdisk
