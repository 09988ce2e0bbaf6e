#include "pdisk/triangle.hpp"

namespace pdisk {

namespace {

void check_radii(double r1, double r2, double r3) {
  const std::array<double, 3> r{r1, r2, r3};
  for (int i = 0; i < 3; ++i) {
    const double v = r[static_cast<std::size_t>(i)];
    if (!std::isfinite(v) || !(v > 0))
      throw std::invalid_argument("triangle: radius R" + std::to_string(i + 1) + " must be positive and finite");
    if (!(v * v < 3))
      throw std::invalid_argument("triangle: radius R" + std::to_string(i + 1) +
                                  " is not admissible (needs R < sqrt 3)");
  }
}

}  // namespace

bool triangle_positive(double r1, double r2, double r3) { return triangle_verdict(r1, r2, r3).positive; }

TriangleVerdict triangle_verdict(double r1, double r2, double r3) {
  check_radii(r1, r2, r3);
  TriangleVerdict v;
  v.radius_square_sum = r1 * r1 + r2 * r2 + r3 * r3;
  v.positive = v.radius_square_sum < 3;
  v.near_boundary = std::abs(v.radius_square_sum - 3) <= 1e-12;
  return v;
}

DiskCollection<double> triangle_collection(double r1, double r2, double r3) {
  auto c = regular_polygon_collection(3, 1.0);
  return c.with_radii({r1, r2, r3});
}

TrivariatePolynomial TrivariatePolynomial::constant(const mpq_class& c) {
  TrivariatePolynomial p;
  p.add_term({0, 0, 0}, c);
  return p;
}

TrivariatePolynomial TrivariatePolynomial::variable(int i) {
  if (i < 0 || i > 2) throw std::invalid_argument("TrivariatePolynomial::variable: index must be 0, 1 or 2");
  Exponent e{0, 0, 0};
  e[static_cast<std::size_t>(i)] = 1;
  TrivariatePolynomial p;
  p.add_term(e, 1);
  return p;
}

void TrivariatePolynomial::add_term(const Exponent& e, const mpq_class& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

TrivariatePolynomial operator+(const TrivariatePolynomial& a, const TrivariatePolynomial& b) {
  TrivariatePolynomial r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

TrivariatePolynomial operator-(const TrivariatePolynomial& a, const TrivariatePolynomial& b) {
  TrivariatePolynomial r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
  return r;
}

TrivariatePolynomial operator*(const TrivariatePolynomial& a, const TrivariatePolynomial& b) {
  TrivariatePolynomial r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
  return r;
}

TrivariatePolynomial TrivariatePolynomial::substitute(const std::array<TrivariatePolynomial, 3>& images) const {
  TrivariatePolynomial out;
  for (const auto& [e, c] : terms_) {
    TrivariatePolynomial term = constant(c);
    for (std::size_t i = 0; i < 3; ++i)
      for (int k = 0; k < e[i]; ++k) term = term * images[i];
    out = out + term;
  }
  return out;
}

mpq_class TrivariatePolynomial::evaluate(const mpq_class& x1, const mpq_class& x2, const mpq_class& x3) const {
  const std::array<mpq_class, 3> x{x1, x2, x3};
  mpq_class sum = 0;
  for (const auto& [e, c] : terms_) {
    mpq_class t = c;
    for (std::size_t i = 0; i < 3; ++i)
      for (int k = 0; k < e[i]; ++k) t *= x[i];
    sum += t;
  }
  return sum;
}

TrivariatePolynomial phi_polynomial() {
  using P = TrivariatePolynomial;
  const P x1 = P::variable(0), x2 = P::variable(1), x3 = P::variable(2);
  return triangle_phi(x1, x2, x3);
}

bool phi_reflection_symmetric() {
  using P = TrivariatePolynomial;
  const P three = P::constant(3);
  const P phi = phi_polynomial();
  return phi.substitute({three - P::variable(0), three - P::variable(1), three - P::variable(2)}) == phi;
}

bool phi_edge_factorizes() {
  using P = TrivariatePolynomial;
  const P three = P::constant(3);
  const P edge = phi_polynomial().substitute({P::variable(0), P::variable(1), P::constant(0)});
  return edge == (three - P::variable(0)) * (three - P::variable(1));
}

}  // namespace pdisk
