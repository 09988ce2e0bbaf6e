#include "pdisk/polynomial.hpp"

#include "integer_prs.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pdisk {

RationalPolynomial::RationalPolynomial(std::vector<mpq_class> coefficients)
    : coeffs_(std::move(coefficients)) {
  for (auto& c : coeffs_) c.canonicalize();
  normalize();
}

RationalPolynomial::RationalPolynomial(std::initializer_list<mpq_class> coefficients)
    : RationalPolynomial(std::vector<mpq_class>(coefficients)) {}

RationalPolynomial RationalPolynomial::constant(const mpq_class& c) { return RationalPolynomial({c}); }

RationalPolynomial RationalPolynomial::monomial(const mpq_class& c, int degree) {
  if (degree < 0) throw std::invalid_argument("monomial: negative degree");
  std::vector<mpq_class> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return RationalPolynomial(std::move(v));
}

RationalPolynomial RationalPolynomial::linear_factor(const mpq_class& root) {
  return RationalPolynomial({-root, mpq_class(1)});
}

void RationalPolynomial::normalize() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

mpq_class RationalPolynomial::coefficient(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const RationalPolynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<mpq_class> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const mpq_class& s) {
  for (auto& c : coeffs_) c *= s;
  normalize();
  return *this;
}

RationalPolynomial RationalPolynomial::operator-() const {
  RationalPolynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

RationalPolynomial RationalPolynomial::derivative() const {
  if (degree() < 1) return {};
  std::vector<mpq_class> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
  return RationalPolynomial(std::move(d));
}

RationalPolynomial RationalPolynomial::pow(int k) const {
  if (k < 0) throw std::invalid_argument("RationalPolynomial::pow: negative exponent");
  RationalPolynomial result = constant(1);
  RationalPolynomial base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

RationalPolynomial RationalPolynomial::compose_affine(const mpq_class& a, const mpq_class& b) const {
  // Horner in the polynomial ring: p(ax+b) = (...(c_d (ax+b) + c_{d-1})(ax+b) + ...)
  const RationalPolynomial inner({b, a});
  RationalPolynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= inner;
    acc += constant(*it);
  }
  return acc;
}

RationalPolynomial RationalPolynomial::compose(const RationalPolynomial& inner) const {
  RationalPolynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= inner;
    acc += constant(*it);
  }
  return acc;
}

std::pair<RationalPolynomial, RationalPolynomial> RationalPolynomial::divmod(
    const RationalPolynomial& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  if (degree() < divisor.degree()) return {RationalPolynomial{}, *this};
  std::vector<mpq_class> rem = coeffs_;
  std::vector<mpq_class> quot(coeffs_.size() - divisor.coeffs_.size() + 1);
  const mpq_class& lead = divisor.leading();
  const std::size_t dd = divisor.coeffs_.size() - 1;
  for (std::size_t k = quot.size(); k-- > 0;) {
    mpq_class q = rem[k + dd] / lead;
    quot[k] = q;
    if (sgn(q) == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) rem[k + j] -= q * divisor.coeffs_[j];
  }
  rem.resize(dd);
  return {RationalPolynomial(std::move(quot)), RationalPolynomial(std::move(rem))};
}

RationalPolynomial RationalPolynomial::monic() const {
  if (is_zero()) return *this;
  RationalPolynomial r = *this;
  const mpq_class lead = leading();
  for (auto& c : r.coeffs_) c /= lead;
  return r;
}

mpq_class RationalPolynomial::evaluate(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double RationalPolynomial::evaluate(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

int RationalPolynomial::sign_at(const mpq_class& x) const { return sgn(evaluate(x)); }

bool RationalPolynomial::has_integer_coefficients() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const mpq_class& c) { return c.get_den() == 1; });
}

std::pair<RationalPolynomial, int> RationalPolynomial::deflate(const mpq_class& root) const {
  if (is_zero()) throw std::domain_error("deflate: zero polynomial");
  const RationalPolynomial factor = linear_factor(root);
  RationalPolynomial current = *this;
  int k = 0;
  while (current.degree() >= 1) {
    auto [q, r] = current.divmod(factor);
    if (!r.is_zero()) break;
    current = std::move(q);
    ++k;
  }
  return {current, k};
}

int RationalPolynomial::root_multiplicity(const mpq_class& root) const { return deflate(root).second; }

std::string RationalPolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const mpq_class& c = coeffs_[static_cast<std::size_t>(k)];
    if (sgn(c) == 0) continue;
    mpq_class mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = (mag == 1);
    if (!unit || k == 0) os << mag.get_str();
    if (k >= 1) {
      if (!unit) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Integer primitive remainder sequences

namespace {

void strip(IntegerCoefficients& c) {
  while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
}

mpz_class content(const IntegerCoefficients& c) {
  mpz_class g = 0;
  for (const auto& x : c) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void make_primitive(IntegerCoefficients& c) {
  strip(c);
  if (c.empty()) return;
  const mpz_class g = content(c);
  if (g > 1)
    for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

}  // namespace

IntegerCoefficients primitive_part(const RationalPolynomial& p) {
  if (p.is_zero()) return {};
  mpz_class den = 1;
  for (const auto& c : p.coefficients()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  IntegerCoefficients out;
  out.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) {
    mpz_class v = c.get_num() * (den / c.get_den());
    out.push_back(std::move(v));
  }
  make_primitive(out);
  return out;
}

RationalPolynomial from_integer(const IntegerCoefficients& c) {
  std::vector<mpq_class> q;
  q.reserve(c.size());
  for (const auto& x : c) q.emplace_back(x);
  return RationalPolynomial(std::move(q));
}

namespace detail {

/// Pseudo-remainder scaled by |lc(g)|^(deg f - deg g + 1), so its sign matches
/// the true remainder of f by g.
IntegerCoefficients signed_pseudo_remainder(const IntegerCoefficients& f, const IntegerCoefficients& g) {
  IntegerCoefficients r = f;
  strip(r);
  const std::size_t dg = g.size() - 1;
  if (r.size() < g.size()) return r;
  const std::size_t delta = r.size() - g.size();
  const mpz_class& lc = g.back();
  std::size_t steps = 0;
  while (!r.empty() && r.size() - 1 >= dg) {
    const mpz_class lead = r.back();
    const std::size_t shift = r.size() - 1 - dg;
    for (auto& x : r) x *= lc;
    for (std::size_t j = 0; j <= dg; ++j) r[shift + j] -= lead * g[j];
    strip(r);
    ++steps;
  }
  if (r.empty()) return r;
  mpz_class scale;
  mpz_pow_ui(scale.get_mpz_t(), lc.get_mpz_t(), static_cast<unsigned long>(delta + 1 - steps));
  const bool negative_total = (sgn(lc) < 0) && ((delta + 1) % 2 == 1);
  if (negative_total) scale = -scale;
  if (scale != 1)
    for (auto& x : r) x *= scale;
  return r;
}

void primitive(IntegerCoefficients& c) { make_primitive(c); }

}  // namespace detail

RationalPolynomial gcd(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  IntegerCoefficients f = primitive_part(a);
  IntegerCoefficients g = primitive_part(b);
  if (f.size() < g.size()) std::swap(f, g);
  while (!g.empty()) {
    IntegerCoefficients r = detail::signed_pseudo_remainder(f, g);
    make_primitive(r);
    f = std::move(g);
    g = std::move(r);
  }
  return from_integer(f).monic();
}

std::vector<RationalPolynomial> square_free_decomposition(const RationalPolynomial& p) {
  if (p.is_zero()) throw std::domain_error("square_free_decomposition: zero polynomial");
  std::vector<RationalPolynomial> factors;
  if (p.degree() == 0) return factors;
  const RationalPolynomial dp = p.derivative();
  const RationalPolynomial c = gcd(p, dp);
  RationalPolynomial w = p.divmod(c).first;
  RationalPolynomial y = dp.divmod(c).first;
  RationalPolynomial z = y - w.derivative();
  while (w.degree() >= 1) {
    RationalPolynomial g = gcd(w, z);
    factors.push_back(g.monic());
    w = w.divmod(g).first;
    y = z.divmod(g).first;
    z = y - w.derivative();
  }
  while (!factors.empty() && factors.back().degree() == 0) factors.pop_back();
  return factors;
}

}  // namespace pdisk
