#include "pdisk/orthopoly.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "pdisk/symmetric.hpp"

namespace pdisk {

mpq_class pochhammer(const mpq_class& a, int k) {
  mpq_class r = 1;
  for (int i = 0; i < k; ++i) r *= a + i;
  return r;
}

mpq_class generalized_binomial(const mpq_class& top, int k) {
  if (k < 0) return 0;
  mpq_class r = 1;
  for (int i = 0; i < k; ++i) r *= top - i;
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(k));
  return r / fact;
}

namespace {

bool is_nonpositive_integer(const mpq_class& q) { return q.get_den() == 1 && sgn(q) <= 0; }

}  // namespace

std::vector<mpq_class> hypergeometric_coefficients(int a, const mpq_class& b, const mpq_class& c) {
  if (a > 0) throw std::invalid_argument("hypergeometric_coefficients: a must be a nonpositive integer");
  int last = -a;
  if (is_nonpositive_integer(b)) {
    const long minus_b = -b.get_num().get_si();
    if (minus_b < last) last = static_cast<int>(minus_b);
  }
  std::vector<mpq_class> t;
  t.reserve(static_cast<std::size_t>(last) + 1);
  mpq_class term = 1;
  t.push_back(term);
  for (int k = 1; k <= last; ++k) {
    const mpq_class denom_factor = c + (k - 1);
    if (sgn(denom_factor) == 0)
      throw std::domain_error("hypergeometric series: Pochhammer (c)_" + std::to_string(k) +
                              " vanishes before termination (c = " + c.get_str() + ")");
    term *= mpq_class(a + k - 1) * (b + (k - 1));
    term /= denom_factor * k;
    t.push_back(term);
  }
  return t;
}

RationalPolynomial hypergeometric_polynomial(int a, const mpq_class& b, const mpq_class& c) {
  return RationalPolynomial(hypergeometric_coefficients(a, b, c));
}

RationalPolynomial jacobi_polynomial(int k, const mpq_class& alpha, const mpq_class& beta) {
  if (k < 0) throw std::invalid_argument("jacobi_polynomial: negative degree");
  if (k == 0) return RationalPolynomial::constant(1);
  const mpq_class sum = alpha + beta;
  std::vector<mpq_class> t;
  try {
    t = hypergeometric_coefficients(-k, mpq_class(-k) - alpha, mpq_class(-2 * k) - sum);
  } catch (const std::domain_error& e) {
    throw std::domain_error("jacobi_polynomial: degenerate parameters alpha + beta = " + sum.get_str() +
                            " for degree " + std::to_string(k) + ": " + e.what());
  }
  // ((x-1)/2)^k * sum_j t_j (-2/(x-1))^j = sum_j t_j (-1)^j 2^(j-k) (x-1)^(k-j)
  const RationalPolynomial x_minus_1({mpq_class(-1), mpq_class(1)});
  RationalPolynomial sum_poly;
  RationalPolynomial power = RationalPolynomial::constant(1);
  std::vector<RationalPolynomial> powers_of(static_cast<std::size_t>(k) + 1);
  for (int e = 0; e <= k; ++e) {
    powers_of[static_cast<std::size_t>(e)] = power;
    power *= x_minus_1;
  }
  for (std::size_t j = 0; j < t.size(); ++j) {
    mpq_class coef = t[j];
    if (j % 2 == 1) coef = -coef;
    const long shift = static_cast<long>(j) - k;
    mpz_class two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(std::labs(shift)));
    if (shift >= 0)
      coef *= two_pow;
    else
      coef /= two_pow;
    sum_poly += powers_of[static_cast<std::size_t>(k) - j] * coef;
  }
  return sum_poly * generalized_binomial(mpq_class(2 * k) + sum, k);
}

RationalPolynomial v_polynomial(int n, int m) {
  if (n < 2 || m < 1 || m > n - 1)
    throw std::invalid_argument("v_polynomial: need n >= 2 and 1 <= m <= n-1 (got n=" + std::to_string(n) +
                                ", m=" + std::to_string(m) + ")");
  const mpq_class scale = generalized_binomial(mpq_class(n), m) / n;
  RationalPolynomial v = hypergeometric_polynomial(-m, mpq_class(1 - m), mpq_class(1 - n)) * scale;
  if (v.degree() != m - 1) throw std::logic_error("v_polynomial: degree is not m-1");
  return v;
}

RationalPolynomial l_operator(const RationalPolynomial& f, int n) {
  const RationalPolynomial x = RationalPolynomial::monomial(1, 1);
  const RationalPolynomial d1 = f.derivative();
  return x * d1.derivative() - d1 * mpq_class(n - 1);
}

std::vector<IdentityCheck> v_identity_suite(int n) {
  if (n < 4) throw std::invalid_argument("v_identity_suite: n must be >= 4");
  std::vector<RationalPolynomial> v(static_cast<std::size_t>(n));
  for (int m = 1; m <= n - 1; ++m) v[static_cast<std::size_t>(m)] = v_polynomial(n, m);
  const RationalPolynomial one_minus_x({mpq_class(1), mpq_class(-1)});
  const RationalPolynomial z = RationalPolynomial::monomial(1, 1);
  const RationalPolynomial one_plus_z({mpq_class(1), mpq_class(1)});

  std::vector<IdentityCheck> out;
  for (int m = 1; m <= n - 1; ++m) {
    const auto& vm = v[static_cast<std::size_t>(m)];
    const auto& vc = v[static_cast<std::size_t>(n - m)];
    const int e = n - 2 * m;
    const bool sym = e >= 0 ? vc == one_minus_x.pow(e) * vm : one_minus_x.pow(-e) * vc == vm;
    out.push_back({"symmetry", n, m, sym});
  }
  for (int m = 2; m <= n - 1; ++m) {
    const bool rec = v[static_cast<std::size_t>(m - 1)] * mpq_class((n + 1 - m) * (m - 1)) ==
                     l_operator(v[static_cast<std::size_t>(m)], n);
    out.push_back({"recurrence", n, m, rec});
  }
  for (int m = 1; m <= n - 1; ++m) {
    // (1+z)^m V(1/(1+z)) = sum_i v_i (1+z)^(m-i), a polynomial since deg V = m-1
    const auto& vm = v[static_cast<std::size_t>(m)];
    RationalPolynomial homogenized;
    for (int i = 0; i <= vm.degree(); ++i) homogenized += one_plus_z.pow(m - i) * vm.coefficient(i);
    mpq_class sign_n2(n * n);
    if ((n - m) % 2 != 0) sign_n2 = -sign_n2;
    const int e = n - 2 * m;
    const RationalPolynomial t = t_polynomial(n, m);
    const bool bridge = e >= 0 ? t == z.pow(e) * homogenized * sign_n2
                               : t * z.pow(-e) == homogenized * sign_n2;
    out.push_back({"bridge", n, m, bridge});
  }
  return out;
}

bool strictly_interlaced(const RationalPolynomial& outer, const RationalPolynomial& inner) {
  if (outer.degree() != inner.degree() + 1) return false;
  if (inner.degree() < 1) return outer.degree() == 1;
  if (gcd(outer, inner).degree() != 0) return false;
  const RationalPolynomial product = outer * inner;
  const RootIsolation iso = isolate_real_roots(product, 1e-12);
  if (iso.distinct_count() != product.degree()) return false;
  for (const auto& iv : iso.intervals)
    if (iv.multiplicity != 1) return false;
  const SturmSequence outer_sturm(outer);
  for (std::size_t i = 0; i < iso.intervals.size(); ++i) {
    const auto& iv = iso.intervals[i];
    const bool is_outer = iv.exact() ? outer.sign_at(iv.lower) == 0 : outer_sturm.count(iv.lower, iv.upper) == 1;
    if (is_outer != (i % 2 == 0)) return false;
  }
  return true;
}

ZeroStructureReport zero_structure_check(int n, int m) {
  if (n < 4 || m < 2 || m > n - 1)
    throw std::invalid_argument("zero_structure_check: need n >= 4 and 2 <= m <= n-1");
  ZeroStructureReport rep;
  rep.n = n;
  rep.m = m;
  const int nu = n / 2;
  const RationalPolynomial v = v_polynomial(n, m);
  rep.roots = isolate_real_roots(v, 1e-12);
  rep.all_real = rep.roots.total_count() == v.degree();

  const auto [rest, mult_at_one] = v.deflate(1);
  rep.multiplicity_ok = mult_at_one == std::max(0, 2 * m - n);

  const int expected_simple = m <= nu ? m - 1 : n - m - 1;
  if (rest.degree() == 0) {
    rep.count_ok = expected_simple == 0;
    rep.location_ok = true;
  } else {
    const mpq_class bound = cauchy_root_bound(rest);
    const RootIsolation above = isolate_real_roots(rest, mpq_class(1), bound, 1e-12);
    const RootIsolation all = isolate_real_roots(rest, 1e-12);
    const bool simple = std::all_of(above.intervals.begin(), above.intervals.end(),
                                    [](const RootInterval& iv) { return iv.multiplicity == 1; });
    rep.count_ok = simple && above.distinct_count() == expected_simple;
    rep.location_ok = all.total_count() == above.total_count() && rest.sign_at(1) != 0;
  }
  if (m >= 3 && m <= nu) rep.interlacing_ok = strictly_interlaced(v, v_polynomial(n, m - 1));
  return rep;
}

}  // namespace pdisk
