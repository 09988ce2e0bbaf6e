#pragma once

#include <complex>
#include <vector>

#include "pdisk/core.hpp"
#include "pdisk/polynomial.hpp"

namespace pdisk {

/// Regular n-gon with common radius r; z = r^2 - 1 >= -1.
struct SymmetricCase {
  int n;
  double r;

  SymmetricCase(int n_, double r_);
  double z() const { return r * r - 1; }
  DiskCollection<double> collection() const { return regular_polygon_collection(n, r); }
};

/// T_{n,m}(z), the m-th circulant eigenvalue of A(z), as an exact integer
/// polynomial. For m < n it is n C(n,m) (-z)^{n-m} F(-m, m-n; 1-n; -1/z)
/// accumulated monomial by monomial (degree n-m); T_{n,n} = n((-z)^n - 1).
RationalPolynomial t_polynomial(int n, int m);
/// T_{n,1}, ..., T_{n,n}.
std::vector<RationalPolynomial> t_polynomials(int n);

/// A_ij(z) = prod_k (eps^k_ij - z), eps^k_ij = w^{i-j} - w^{k-j} - w^{i-k},
/// with w = exp(2 pi i / n) from cos/sin. A(z) = -Q(sqrt(1+z)).
template <typename Scalar = double>
HermitianMatrix<Scalar> a_matrix(int n, Scalar z) {
  using Complex = std::complex<Scalar>;
  using std::acos, std::cos, std::sin;
  if (n < 1) throw std::invalid_argument("a_matrix: n must be positive");
  const Scalar two_pi = Scalar(2) * acos(Scalar(-1));
  std::vector<Complex> w(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const Scalar t = two_pi * Scalar(k) / Scalar(n);
    w[static_cast<std::size_t>(k)] = Complex(cos(t), sin(t));
  }
  auto pw = [&](int e) { return w[static_cast<std::size_t>(((e % n) + n) % n)]; };
  HermitianMatrix<Scalar> a(n, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      Complex prod(1);
      for (int k = 1; k <= n; ++k) prod *= pw(i - j) - pw(k - j) - pw(i - k) - z;
      a(i - 1, j - 1) = prod;
    }
  return a;
}

struct LogDeterminant {
  bool singular = false;  ///< some T_{n,m}(z) vanishes exactly
  double log_abs = 0;
  int sign = 0;
};

/// log|det A(z)| and its sign by LU, carried out in MPFR arithmetic with
/// 30 digits beyond log10 of the condition number of A(z). The eigenvalues of
/// A(z) are T_{n,m}(z), so the condition number is known exactly beforehand.
LogDeterminant a_matrix_log_determinant(int n, double z);

/// lambda_m = sum_j w^{m(j-1)} A_1j(z), m = 1..n, computed from the matrix.
std::vector<std::complex<double>> circulant_direct_sums(int n, double z);

/// [T_{n,1}(z), ..., T_{n,n}(z)] from the exact polynomials at the exact
/// binary value of z. Cross-checked against circulant_direct_sums (real parts
/// agree and imaginary residue vanishes to 1e-9 of the row's magnitude);
/// throws std::logic_error on mismatch.
std::vector<double> circulant_spectrum(int n, double z);

/// True iff T_{n,m}(r^2 - 1) < 0 for all m (exact signs; zero counts as not
/// positive).
bool positivity_by_t(int n, const mpq_class& r);
bool positivity_by_t(int n, double r);

struct DetFactorizationReport {
  bool boundary = false;        ///< the closed form vanishes exactly
  double log_abs_lu = 0;        ///< log|det Q| from partial-pivot LU
  double log_abs_formula = 0;   ///< log|c_n [1-(1-r^2)^n] prod_m P_m^{n-2m,-1}(2r^2-1)|
  int sign_lu = 0;
  int sign_formula = 0;
  double relative_error = 0;    ///< |log_lu - log_formula| / max(|log_formula|, 1)

  bool sign_agrees() const { return sign_lu == sign_formula; }
};

/// Compares det Q of the n-gon collection with the Jacobi factorization, in
/// the log domain. Q is built from the core product formula and factored by LU
/// in MPFR arithmetic, at a precision covering its exact condition number
/// (near r = 1 the eigenvalue T_{n,1} ~ z^{n-2} is tiny). Needs 2 <= n <= 64.
DetFactorizationReport det_factorization_check(int n, double r);

/// z^{max(0,2m-n)} (n-m) T_{n,m}(z) == (-1)^{n-m} n^2 z^{max(0,n-2m)} P_m^{n-2m,-1}(2z+1),
/// exactly, for 1 <= m <= n-1.
bool jacobi_link_holds(int n, int m);

/// log|q| for a nonzero rational without overflow.
double log_abs(const mpq_class& q);

}  // namespace pdisk
