#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "pdisk/gaussian_rational.hpp"

namespace pdisk {

template <typename Scalar>
using HermitianMatrix = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;
using ExactHermitianMatrix = Eigen::Matrix<GaussianRational, Eigen::Dynamic, Eigen::Dynamic>;

/// Open disks B(a_j, R_j): complex centers and positive radii.
///
/// Construction rejects non-finite values, nonpositive radii, and repeated
/// centers. Admissibility (no center inside another disk) is a query, not an
/// invariant.
template <typename Scalar>
class DiskCollection {
 public:
  using Complex = std::complex<Scalar>;

  DiskCollection(std::vector<Complex> centers, std::vector<Scalar> radii)
      : centers_(std::move(centers)), radii_(std::move(radii)) {
    if (centers_.empty()) throw std::invalid_argument("disk collection must contain at least one disk");
    if (centers_.size() != radii_.size())
      throw std::invalid_argument("disk collection: centers and radii differ in length");
    for (std::size_t i = 0; i < centers_.size(); ++i) {
      if (!std::isfinite(centers_[i].real()) || !std::isfinite(centers_[i].imag()))
        throw std::invalid_argument("disk " + std::to_string(i) + ": center is not finite");
      if (!std::isfinite(radii_[i]) || !(radii_[i] > 0))
        throw std::invalid_argument("disk " + std::to_string(i) + ": radius must be positive and finite");
      for (std::size_t j = 0; j < i; ++j)
        if (centers_[i] == centers_[j])
          throw std::invalid_argument("disks " + std::to_string(j) + " and " + std::to_string(i) +
                                      " share a center");
    }
  }

  int size() const { return static_cast<int>(centers_.size()); }
  const std::vector<Complex>& centers() const { return centers_; }
  const std::vector<Scalar>& radii() const { return radii_; }

  /// Radii multiplied by s.
  DiskCollection scaled(Scalar s) const {
    std::vector<Scalar> r = radii_;
    for (auto& x : r) x *= s;
    return DiskCollection(centers_, std::move(r));
  }
  /// Radii multiplied componentwise.
  DiskCollection with_radii(std::vector<Scalar> radii) const { return DiskCollection(centers_, std::move(radii)); }
  /// a_j -> u * a_j + v; radii multiplied by |u|.
  DiskCollection transformed(Complex u, Complex v) const {
    std::vector<Complex> c = centers_;
    for (auto& a : c) a = u * a + v;
    std::vector<Scalar> r = radii_;
    for (auto& x : r) x *= std::abs(u);
    return DiskCollection(std::move(c), std::move(r));
  }
  DiskCollection subcollection(std::span<const int> indices) const {
    std::vector<Complex> c;
    std::vector<Scalar> r;
    for (int i : indices) {
      c.push_back(centers_.at(static_cast<std::size_t>(i)));
      r.push_back(radii_.at(static_cast<std::size_t>(i)));
    }
    return DiskCollection(std::move(c), std::move(r));
  }

  /// min over j != k of |a_j - a_k|; infinity for a single disk.
  Scalar nearest_center_distance(int k) const {
    Scalar best = std::numeric_limits<Scalar>::infinity();
    for (int j = 0; j < size(); ++j)
      if (j != k) best = std::min(best, std::abs(centers_[j] - centers_[k]));
    return best;
  }

 private:
  std::vector<Complex> centers_;
  std::vector<Scalar> radii_;
};

/// Regular n-gon collection B(w^j, r), w = exp(2 pi i / n), j = 1..n.
template <typename Scalar = double>
DiskCollection<Scalar> regular_polygon_collection(int n, Scalar r) {
  if (n < 1) throw std::invalid_argument("regular_polygon_collection: n must be positive");
  std::vector<std::complex<Scalar>> c;
  const Scalar two_pi = Scalar(2) * std::acos(Scalar(-1));
  for (int j = 1; j <= n; ++j) {
    const Scalar t = two_pi * Scalar(j % n) / Scalar(n);
    c.emplace_back(std::cos(t), std::sin(t));
  }
  return DiskCollection<Scalar>(std::move(c), std::vector<Scalar>(static_cast<std::size_t>(n), r));
}

/// Disks with exact Gaussian-rational centers and rational radii.
class RationalDiskCollection {
 public:
  RationalDiskCollection(std::vector<GaussianRational> centers, std::vector<mpq_class> radii);

  int size() const { return static_cast<int>(centers_.size()); }
  const std::vector<GaussianRational>& centers() const { return centers_; }
  const std::vector<mpq_class>& radii() const { return radii_; }
  DiskCollection<double> to_floating() const;

 private:
  std::vector<GaussianRational> centers_;
  std::vector<mpq_class> radii_;
};

namespace detail {

template <typename Matrix, typename Complex, typename Real, typename Conj>
Matrix fill_q(const std::vector<Complex>& a, const std::vector<Real>& radii, Conj conjugate) {
  const auto n = static_cast<Eigen::Index>(a.size());
  Matrix q(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i; j < n; ++j) {
      Complex prod(1);
      for (Eigen::Index k = 0; k < n; ++k) {
        const Real r2 = radii[static_cast<std::size_t>(k)] * radii[static_cast<std::size_t>(k)];
        prod *= (a[static_cast<std::size_t>(i)] - a[static_cast<std::size_t>(k)]) *
                    conjugate(a[static_cast<std::size_t>(j)] - a[static_cast<std::size_t>(k)]) -
                Complex(r2);
      }
      q(i, j) = -prod;
    }
  }
  return q;
}

}  // namespace detail

/// Q_ij = -prod_k [(a_i - a_k) conj(a_j - a_k) - R_k^2]. The upper triangle is
/// computed and mirrored, so the result is Hermitian exactly; diagonal
/// imaginary residue is checked (< 1e-12 relative) and cleared.
template <typename Scalar>
HermitianMatrix<Scalar> build_q_matrix(const DiskCollection<Scalar>& c) {
  using Complex = std::complex<Scalar>;
  auto q = detail::fill_q<HermitianMatrix<Scalar>>(c.centers(), c.radii(),
                                                   [](const Complex& z) { return std::conj(z); });
  const Eigen::Index n = q.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    if (std::abs(q(i, i).imag()) > Scalar(1e-12) * std::max(std::abs(q(i, i)), Scalar(1)))
      throw std::logic_error("build_q_matrix: diagonal entry is not real");
    q(i, i) = Complex(q(i, i).real(), 0);
    for (Eigen::Index j = i + 1; j < n; ++j) q(j, i) = std::conj(q(i, j));
  }
  return q;
}

ExactHermitianMatrix build_q_matrix(const RationalDiskCollection& c);

/// True iff R_k < |a_j - a_k| for every k and every j != k.
template <typename Scalar>
bool is_admissible(const DiskCollection<Scalar>& c) {
  for (int k = 0; k < c.size(); ++k)
    if (!(c.radii()[static_cast<std::size_t>(k)] < c.nearest_center_distance(k))) return false;
  return true;
}

bool is_admissible(const RationalDiskCollection& c);

/// beta = min over i != j of (R_i + R_j) / |a_i - a_j|.
template <typename Scalar>
Scalar overlap_measure(const DiskCollection<Scalar>& c) {
  if (c.size() < 2) throw std::invalid_argument("overlap_measure needs at least two disks");
  Scalar best = std::numeric_limits<Scalar>::infinity();
  for (int i = 0; i < c.size(); ++i)
    for (int j = i + 1; j < c.size(); ++j)
      best = std::min(best, (c.radii()[static_cast<std::size_t>(i)] + c.radii()[static_cast<std::size_t>(j)]) /
                                std::abs(c.centers()[static_cast<std::size_t>(i)] -
                                         c.centers()[static_cast<std::size_t>(j)]));
  return best;
}

// ---------------------------------------------------------------------------
// Positive-definiteness decisions

enum class Verdict { PositiveDefinite, NotPositiveDefinite, Indeterminate };
enum class DecisionMode { Floating, ExactIfRational };

std::string to_string(Verdict v);

/// Exact-mode certificate: leading principal minors (Sylvester), stopping at
/// the first nonpositive one.
struct LeadingMinors {
  std::vector<double> values;
  std::vector<int> signs;
};
/// Index (into the input matrix) and value of the pivot that failed.
struct FailingPivot {
  int index = -1;
  double value = 0;
};
/// Successful pivoted LDL: original indices in pivot order and their pivots
/// (of the diagonally equilibrated matrix).
struct PivotSequence {
  std::vector<int> order;
  std::vector<double> pivots;
};
struct EigenvalueList {
  std::vector<double> values;
};
using Certificate = std::variant<LeadingMinors, FailingPivot, PivotSequence, EigenvalueList>;

struct PositivityReport {
  Verdict verdict = Verdict::Indeterminate;
  Certificate certificate;
  double tolerance_used = 0;

  bool positive() const { return verdict == Verdict::PositiveDefinite; }
};

/// Max |m_ij - conj(m_ji)| <= rel_tol * max |m_ij|.
template <typename Scalar>
bool is_hermitian(const HermitianMatrix<Scalar>& m, Scalar rel_tol = Scalar(1e-12)) {
  if (m.rows() != m.cols()) return false;
  const Scalar scale = std::max(m.cwiseAbs().maxCoeff(), std::numeric_limits<Scalar>::min());
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= rel_tol * scale;
}

/// Floating decision by diagonally pivoted LDL^H.
///
/// A negative diagonal entry is an immediate NotPositiveDefinite certificate
/// (a zero one gives Indeterminate). Otherwise the matrix is equilibrated to
/// unit diagonal (a congruence, so inertia is unchanged) and factored with
/// diagonal pivoting: a remaining diagonal below -tol is NotPositiveDefinite,
/// a largest remaining diagonal within tol of zero is Indeterminate. Since the
/// equilibrated diagonal is 1, tol is relative to the largest diagonal entry.
template <typename Scalar>
PositivityReport is_positive_definite(const HermitianMatrix<Scalar>& m, Scalar tol = Scalar(1e-10),
                                      bool with_eigenvalues = false) {
  using Complex = std::complex<Scalar>;
  if (!(tol > 0)) throw std::invalid_argument("is_positive_definite: tolerance must be positive");
  if (!is_hermitian(m)) throw std::invalid_argument("is_positive_definite: matrix is not Hermitian");
  const Eigen::Index n = m.rows();
  PositivityReport rep;
  rep.tolerance_used = static_cast<double>(tol);

  const Eigen::Matrix<Scalar, Eigen::Dynamic, 1> diag = m.diagonal().real();
  Eigen::Index worst = 0;
  const Scalar min_diag = diag.minCoeff(&worst);
  if (!(min_diag > 0)) {
    rep.verdict = min_diag < 0 ? Verdict::NotPositiveDefinite : Verdict::Indeterminate;
    rep.certificate = FailingPivot{static_cast<int>(worst), static_cast<double>(min_diag)};
    return rep;
  }

  const Eigen::Matrix<Scalar, Eigen::Dynamic, 1> inv_sqrt = diag.cwiseSqrt().cwiseInverse();
  HermitianMatrix<Scalar> w = inv_sqrt.asDiagonal() * m * inv_sqrt.asDiagonal();
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = static_cast<int>(i);

  PivotSequence seq;
  for (Eigen::Index k = 0; k < n; ++k) {
    const Eigen::Index r = n - k;
    Eigen::Index jmax = 0, jmin = 0;
    const Eigen::Matrix<Scalar, Eigen::Dynamic, 1> d = w.diagonal().tail(r).real();
    const Scalar dmax = d.maxCoeff(&jmax);
    const Scalar dmin = d.minCoeff(&jmin);
    if (dmin < -tol) {
      rep.verdict = Verdict::NotPositiveDefinite;
      rep.certificate = FailingPivot{perm[static_cast<std::size_t>(k + jmin)], static_cast<double>(dmin)};
      return rep;
    }
    if (dmax <= tol) {
      rep.verdict = Verdict::Indeterminate;
      rep.certificate = FailingPivot{perm[static_cast<std::size_t>(k + jmax)], static_cast<double>(dmax)};
      return rep;
    }
    const Eigen::Index p = k + jmax;
    if (p != k) {
      w.row(k).swap(w.row(p));
      w.col(k).swap(w.col(p));
      std::swap(perm[static_cast<std::size_t>(k)], perm[static_cast<std::size_t>(p)]);
    }
    const Scalar pivot = w(k, k).real();
    seq.order.push_back(perm[static_cast<std::size_t>(k)]);
    seq.pivots.push_back(static_cast<double>(pivot));
    if (r > 1) {
      const Eigen::Matrix<Complex, Eigen::Dynamic, 1> col = w.col(k).tail(r - 1);
      w.bottomRightCorner(r - 1, r - 1).noalias() -= (col * col.adjoint()) / pivot;
    }
  }
  rep.verdict = Verdict::PositiveDefinite;
  rep.certificate = std::move(seq);
  if (with_eigenvalues) {
    Eigen::SelfAdjointEigenSolver<HermitianMatrix<Scalar>> es(m, Eigen::EigenvaluesOnly);
    EigenvalueList ev;
    for (Eigen::Index i = 0; i < n; ++i) ev.values.push_back(static_cast<double>(es.eigenvalues()(i)));
    rep.certificate = std::move(ev);
  }
  return rep;
}

/// Exact Sylvester test: all leading principal minors > 0, computed by
/// Gaussian elimination over the Gaussian rationals.
PositivityReport is_positive_definite(const ExactHermitianMatrix& m);

/// Mode dispatch for floating matrices. In ExactIfRational mode every double
/// entry is taken as the exact binary rational it represents.
PositivityReport is_positive_definite(const HermitianMatrix<double>& m, DecisionMode mode, double tol = 1e-10);

/// Largest s with {B(a_j, s R_j)} positive, to absolute tolerance tol.
///
/// Positivity is monotone in s (shrinking radii keeps a positive collection
/// positive), so the decision is bracketed by doubling/halving from s = 1 and
/// then bisected. The bracket is capped where some scaled radius reaches its
/// nearest center distance; there Q_kk = 0 and positivity fails.
template <typename Scalar>
Scalar max_uniform_scale(const DiskCollection<Scalar>& c, Scalar tol = Scalar(1e-12),
                         Scalar decision_tol = Scalar(1e-14)) {
  if (!(tol > 0)) throw std::invalid_argument("max_uniform_scale: tolerance must be positive");
  if (c.size() == 1) return std::numeric_limits<Scalar>::infinity();
  Scalar cap = std::numeric_limits<Scalar>::infinity();
  for (int k = 0; k < c.size(); ++k)
    cap = std::min(cap, c.nearest_center_distance(k) / c.radii()[static_cast<std::size_t>(k)]);
  auto positive = [&](Scalar s) {
    return is_positive_definite(build_q_matrix(c.scaled(s)), decision_tol).positive();
  };
  Scalar lo, hi;
  if (Scalar(1) < cap && positive(Scalar(1))) {
    lo = 1;
    hi = 2;
    while (hi < cap && positive(hi)) {
      lo = hi;
      hi *= 2;
    }
    hi = std::min(hi, cap);
  } else {
    hi = std::min(Scalar(1), cap);
    lo = hi / 2;
    while (!positive(lo)) {
      hi = lo;
      lo /= 2;
      if (lo < std::numeric_limits<Scalar>::min())
        throw std::runtime_error("max_uniform_scale: no positive scale found");
    }
  }
  while (hi - lo > tol) {
    const Scalar mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;
    (positive(mid) ? lo : hi) = mid;
  }
  return lo + (hi - lo) / 2;
}

}  // namespace pdisk
