#pragma once

#include <string>
#include <vector>

#include "pdisk/polynomial.hpp"
#include "pdisk/roots.hpp"

namespace pdisk {

/// Rising factorial (a)_k = a (a+1) ... (a+k-1), with (a)_0 = 1.
mpq_class pochhammer(const mpq_class& a, int k);
/// Generalized binomial N (N-1) ... (N-k+1) / k! for rational N.
mpq_class generalized_binomial(const mpq_class& top, int k);

/// Coefficients t_0..t_K of the terminating Gauss series F(a, b; c; x),
/// t_k = (a)_k (b)_k / ((c)_k k!). Terminates at K = -a, or earlier at -b when
/// b is a nonpositive integer with b > a. Throws std::domain_error naming k if
/// (c)_k vanishes before termination.
std::vector<mpq_class> hypergeometric_coefficients(int a, const mpq_class& b, const mpq_class& c);

/// F(a, b; c; x) as an exact polynomial in x (a must be a nonpositive integer).
RationalPolynomial hypergeometric_polynomial(int a, const mpq_class& b, const mpq_class& c);

/// Generalized Jacobi polynomial P_k^{alpha,beta}(x), expanded from
/// ((x-1)/2)^k C(2k+alpha+beta, k) F(-k, -k-alpha; -2k-alpha-beta; -2/(x-1))
/// as a polynomial identity. Parameters <= -1 are allowed; the degree may drop.
RationalPolynomial jacobi_polynomial(int k, const mpq_class& alpha, const mpq_class& beta);

/// V_{n,m}(x) = C(n,m)/n * F(-m, 1-m; 1-n; x), degree exactly m-1.
RationalPolynomial v_polynomial(int n, int m);

/// L[f] = x f'' - (n-1) f'
RationalPolynomial l_operator(const RationalPolynomial& f, int n);

struct IdentityCheck {
  std::string identity;
  int n = 0;
  int m = 0;
  bool holds = false;
};

/// Exact checks of the V-polynomial relations for one n >= 4:
/// "symmetry"   V_{n,n-m} = (1-x)^{n-2m} V_{n,m}           (m = 1..n-1)
/// "recurrence" (n+1-m)(m-1) V_{n,m-1} = L[V_{n,m}]         (m = 2..n-1)
/// "bridge"     T_{n,m}(z) = (-1)^{n-m} n^2 z^{n-2m} (1+z)^m V_{n,m}(1/(1+z)) (m = 1..n-1)
/// Negative exponents are moved to the other side so both sides are polynomials.
std::vector<IdentityCheck> v_identity_suite(int n);

struct ZeroStructureReport {
  int n = 0;
  int m = 0;
  RootIsolation roots;          ///< all real roots of V_{n,m}
  bool all_real = false;        ///< real roots (with multiplicity) == degree
  bool count_ok = false;        ///< expected number of simple roots in (1, inf)
  bool location_ok = false;     ///< every root other than x = 1 lies in (1, inf)
  bool multiplicity_ok = false; ///< x = 1 has multiplicity max(0, 2m-n)
  bool interlacing_ok = true;   ///< V_{n,m-1} roots interlace V_{n,m} (m <= n/2 only)

  bool passed() const { return all_real && count_ok && location_ok && multiplicity_ok && interlacing_ok; }
};

/// Root structure of V_{n,m} for n >= 4, 2 <= m <= n-1, certified by exact
/// Sturm isolation.
ZeroStructureReport zero_structure_check(int n, int m);

/// True when a_1 < b_1 < a_2 < ... (strict alternation), given simple roots of
/// two coprime polynomials; intervals are refined until they separate.
bool strictly_interlaced(const RationalPolynomial& outer, const RationalPolynomial& inner);

}  // namespace pdisk
