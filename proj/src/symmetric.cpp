#include "pdisk/symmetric.hpp"

#include <Eigen/LU>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

#include "pdisk/orthopoly.hpp"

namespace pdisk {

SymmetricCase::SymmetricCase(int n_, double r_) : n(n_), r(r_) {
  if (n < 2) throw std::invalid_argument("symmetric case needs n >= 2");
  if (!(r > 0) || !std::isfinite(r)) throw std::invalid_argument("symmetric case needs a positive finite radius");
}

RationalPolynomial t_polynomial(int n, int m) {
  if (n < 2 || m < 1 || m > n)
    throw std::invalid_argument("t_polynomial: need n >= 2 and 1 <= m <= n (got n=" + std::to_string(n) +
                                ", m=" + std::to_string(m) + ")");
  if (m == n) {
    // n((-z)^n - 1)
    RationalPolynomial t = RationalPolynomial::monomial(n % 2 == 0 ? n : -n, n) - RationalPolynomial::constant(n);
    return t;
  }
  // (-z)^{n-m} sum_k t_k (-1/z)^k = sum_k t_k (-1)^{n-m+k} z^{n-m-k}
  const std::vector<mpq_class> terms = hypergeometric_coefficients(-m, mpq_class(m - n), mpq_class(1 - n));
  if (static_cast<int>(terms.size()) != std::min(m, n - m) + 1)
    throw std::logic_error("t_polynomial: series did not terminate at min(m, n-m)");
  const mpq_class scale = generalized_binomial(mpq_class(n), m) * n;
  std::vector<mpq_class> coeffs(static_cast<std::size_t>(n - m) + 1);
  for (std::size_t k = 0; k < terms.size(); ++k) {
    mpq_class c = terms[k] * scale;
    if ((n - m + static_cast<int>(k)) % 2 != 0) c = -c;
    coeffs[static_cast<std::size_t>(n - m) - k] += c;
  }
  RationalPolynomial t(std::move(coeffs));
  if (!t.has_integer_coefficients()) throw std::logic_error("t_polynomial: non-integer coefficient");
  if (t.degree() != n - m) throw std::logic_error("t_polynomial: degree is not n-m");
  return t;
}

std::vector<RationalPolynomial> t_polynomials(int n) {
  std::vector<RationalPolynomial> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int m = 1; m <= n; ++m) out.push_back(t_polynomial(n, m));
  return out;
}

std::vector<std::complex<double>> circulant_direct_sums(int n, double z) {
  const HermitianMatrix<double> a = a_matrix(n, z);
  const double two_pi = 2 * std::acos(-1.0);
  std::vector<std::complex<double>> out;
  for (int m = 1; m <= n; ++m) {
    std::complex<double> s(0);
    for (int j = 1; j <= n; ++j) {
      const double t = two_pi * static_cast<double>((static_cast<long>(m) * (j - 1)) % n) / n;
      s += std::complex<double>(std::cos(t), std::sin(t)) * a(0, j - 1);
    }
    out.push_back(s);
  }
  return out;
}

std::vector<double> circulant_spectrum(int n, double z) {
  if (!(z >= -1) || !std::isfinite(z)) throw std::invalid_argument("circulant_spectrum: need finite z >= -1");
  const mpq_class zq(z);
  std::vector<double> values;
  for (int m = 1; m <= n; ++m) values.push_back(t_polynomial(n, m).evaluate(zq).get_d());

  const auto direct = circulant_direct_sums(n, z);
  const HermitianMatrix<double> a = a_matrix(n, z);
  const double scale = std::max(1.0, a.row(0).cwiseAbs().sum());
  for (int m = 0; m < n; ++m) {
    const auto& d = direct[static_cast<std::size_t>(m)];
    if (std::abs(d.imag()) > 1e-9 * scale || std::abs(d.real() - values[static_cast<std::size_t>(m)]) > 1e-9 * scale)
      throw std::logic_error("circulant_spectrum: direct eigenvalue sum disagrees with T_{" + std::to_string(n) +
                             "," + std::to_string(m + 1) + "}");
  }
  return values;
}

bool positivity_by_t(int n, const mpq_class& r) {
  if (n < 2) throw std::invalid_argument("positivity_by_t: n must be >= 2");
  if (sgn(r) <= 0) throw std::invalid_argument("positivity_by_t: r must be positive");
  const mpq_class z = r * r - 1;
  for (int m = 1; m <= n; ++m)
    if (t_polynomial(n, m).sign_at(z) >= 0) return false;
  return true;
}

bool positivity_by_t(int n, double r) {
  if (!std::isfinite(r)) throw std::invalid_argument("positivity_by_t: r must be finite");
  return positivity_by_t(n, mpq_class(r));
}

namespace {

using MpReal = boost::multiprecision::mpfr_float;
using MpComplex = std::complex<MpReal>;

struct PrecisionGuard {
  unsigned saved = MpReal::default_precision();
  explicit PrecisionGuard(unsigned digits) { MpReal::default_precision(digits); }
  ~PrecisionGuard() { MpReal::default_precision(saved); }
};

// 30 + log10(max |T_{n,m}(z)| / min |T_{n,m}(z)|); empty when some T vanishes.
std::optional<unsigned> lu_digits(int n, const mpq_class& z) {
  double hi = -std::numeric_limits<double>::infinity();
  double lo = std::numeric_limits<double>::infinity();
  for (int m = 1; m <= n; ++m) {
    const mpq_class t = t_polynomial(n, m).evaluate(z);
    if (sgn(t) == 0) return std::nullopt;
    const double l = log_abs(t) / std::log(10.0);
    hi = std::max(hi, l);
    lo = std::min(lo, l);
  }
  return 30 + static_cast<unsigned>(std::ceil(hi - lo));
}

LogDeterminant log_determinant(const HermitianMatrix<MpReal>& m) {
  const Eigen::PartialPivLU<HermitianMatrix<MpReal>> lu(m);
  const auto& u = lu.matrixLU();
  MpReal log_sum = 0;
  MpComplex phase(MpReal(lu.permutationP().determinant()), MpReal(0));
  LogDeterminant out;
  for (Eigen::Index i = 0; i < u.rows(); ++i) {
    const MpReal mag = abs(u(i, i));
    if (mag == 0) {
      out.singular = true;
      return out;
    }
    log_sum += log(mag);
    phase *= u(i, i) / mag;
  }
  out.log_abs = log_sum.convert_to<double>();
  out.sign = phase.real() > 0 ? 1 : -1;
  return out;
}

}  // namespace

LogDeterminant a_matrix_log_determinant(int n, double z) {
  if (!(z >= -1) || !std::isfinite(z)) throw std::invalid_argument("a_matrix_log_determinant: need finite z >= -1");
  const auto digits = lu_digits(n, mpq_class(z));
  if (!digits) return LogDeterminant{true, 0, 0};
  const PrecisionGuard guard(*digits);
  return log_determinant(a_matrix<MpReal>(n, MpReal(z)));
}

double log_abs(const mpq_class& q) {
  if (sgn(q) == 0) throw std::domain_error("log_abs of zero");
  auto log_z = [](const mpz_class& v) {
    long e = 0;
    const double d = mpz_get_d_2exp(&e, v.get_mpz_t());
    return std::log(std::abs(d)) + static_cast<double>(e) * std::log(2.0);
  };
  return log_z(q.get_num()) - log_z(q.get_den());
}

DetFactorizationReport det_factorization_check(int n, double r) {
  if (n < 2 || n > 64) throw std::invalid_argument("det_factorization_check: need 2 <= n <= 64");
  if (!(r > 0) || !std::isfinite(r)) throw std::invalid_argument("det_factorization_check: r must be positive");
  DetFactorizationReport rep;

  const mpq_class rq(r);
  const mpq_class r2 = rq * rq;
  std::vector<mpq_class> factors;
  mpq_class one_minus_pow = 1;
  for (int i = 0; i < n; ++i) one_minus_pow *= 1 - r2;
  factors.push_back(1 - one_minus_pow);
  const mpq_class x = 2 * r2 - 1;
  for (int m = 1; m <= n - 1; ++m) factors.push_back(jacobi_polynomial(m, mpq_class(n - 2 * m), mpq_class(-1)).evaluate(x));

  // c_n = (-1)^{(n-1)(n-2)/2} n^{2n-1} / (n-1)!
  int sign = ((n - 1) * (n - 2) / 2) % 2 == 0 ? 1 : -1;
  double log_formula = (2.0 * n - 1) * std::log(static_cast<double>(n)) - std::lgamma(static_cast<double>(n));
  for (const auto& f : factors) {
    if (sgn(f) == 0) {
      rep.boundary = true;
      return rep;
    }
    sign *= sgn(f);
    log_formula += log_abs(f);
  }
  rep.sign_formula = sign;
  rep.log_abs_formula = log_formula;

  const auto digits = lu_digits(n, r2 - 1);
  if (!digits) {
    rep.boundary = true;
    return rep;
  }
  const PrecisionGuard guard(*digits);
  const MpReal r_mp(r);
  const MpReal two_pi = 2 * acos(MpReal(-1));
  std::vector<MpComplex> centers;
  for (int j = 1; j <= n; ++j) {
    const MpReal t = two_pi * (j % n) / n;
    centers.emplace_back(cos(t), sin(t));
  }
  HermitianMatrix<MpReal> q = detail::fill_q<HermitianMatrix<MpReal>>(
      centers, std::vector<MpReal>(static_cast<std::size_t>(n), r_mp), [](const MpComplex& w) { return std::conj(w); });
  for (Eigen::Index i = 0; i < q.rows(); ++i)
    for (Eigen::Index j = i + 1; j < q.cols(); ++j) q(j, i) = std::conj(q(i, j));
  const LogDeterminant ld = log_determinant(q);
  if (ld.singular) {
    rep.boundary = true;
    return rep;
  }
  rep.log_abs_lu = ld.log_abs;
  rep.sign_lu = ld.sign;
  rep.relative_error = std::abs(rep.log_abs_lu - log_formula) / std::max(std::abs(log_formula), 1.0);
  return rep;
}

bool jacobi_link_holds(int n, int m) {
  if (n < 2 || m < 1 || m > n - 1) throw std::invalid_argument("jacobi_link_holds: need 1 <= m <= n-1");
  const RationalPolynomial z = RationalPolynomial::monomial(1, 1);
  const RationalPolynomial p = jacobi_polynomial(m, mpq_class(n - 2 * m), mpq_class(-1)).compose_affine(2, 1);
  mpq_class c(n * n);
  if ((n - m) % 2 != 0) c = -c;
  const RationalPolynomial lhs = t_polynomial(n, m) * z.pow(std::max(0, 2 * m - n)) * mpq_class(n - m);
  const RationalPolynomial rhs = p * z.pow(std::max(0, n - 2 * m)) * c;
  return lhs == rhs;
}

}  // namespace pdisk
