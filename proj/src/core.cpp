#include "pdisk/core.hpp"

namespace pdisk {

RationalDiskCollection::RationalDiskCollection(std::vector<GaussianRational> centers, std::vector<mpq_class> radii)
    : centers_(std::move(centers)), radii_(std::move(radii)) {
  if (centers_.empty()) throw std::invalid_argument("disk collection must contain at least one disk");
  if (centers_.size() != radii_.size())
    throw std::invalid_argument("disk collection: centers and radii differ in length");
  for (std::size_t i = 0; i < centers_.size(); ++i) {
    if (sgn(radii_[i]) <= 0) throw std::invalid_argument("disk " + std::to_string(i) + ": radius must be positive");
    for (std::size_t j = 0; j < i; ++j)
      if (centers_[i] == centers_[j])
        throw std::invalid_argument("disks " + std::to_string(j) + " and " + std::to_string(i) + " share a center");
  }
}

DiskCollection<double> RationalDiskCollection::to_floating() const {
  std::vector<std::complex<double>> c;
  std::vector<double> r;
  for (const auto& z : centers_) c.emplace_back(z.re.get_d(), z.im.get_d());
  for (const auto& x : radii_) r.push_back(x.get_d());
  return DiskCollection<double>(std::move(c), std::move(r));
}

ExactHermitianMatrix build_q_matrix(const RationalDiskCollection& c) {
  auto q = detail::fill_q<ExactHermitianMatrix>(c.centers(), c.radii(),
                                                 [](const GaussianRational& z) { return conj(z); });
  for (Eigen::Index i = 0; i < q.rows(); ++i) {
    if (sgn(q(i, i).im) != 0) throw std::logic_error("build_q_matrix: diagonal entry is not real");
    for (Eigen::Index j = i + 1; j < q.rows(); ++j) q(j, i) = conj(q(i, j));
  }
  return q;
}

bool is_admissible(const RationalDiskCollection& c) {
  for (int k = 0; k < c.size(); ++k) {
    const mpq_class r2 = c.radii()[static_cast<std::size_t>(k)] * c.radii()[static_cast<std::size_t>(k)];
    for (int j = 0; j < c.size(); ++j) {
      if (j == k) continue;
      if (!(r2 < (c.centers()[static_cast<std::size_t>(j)] - c.centers()[static_cast<std::size_t>(k)]).norm()))
        return false;
    }
  }
  return true;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::PositiveDefinite:
      return "positive_definite";
    case Verdict::NotPositiveDefinite:
      return "not_positive_definite";
    case Verdict::Indeterminate:
      return "indeterminate";
  }
  return "unknown";
}

PositivityReport is_positive_definite(const ExactHermitianMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("is_positive_definite: matrix is not square");
  const Eigen::Index n = m.rows();
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i; j < n; ++j)
      if (m(i, j) != conj(m(j, i))) throw std::invalid_argument("is_positive_definite: matrix is not Hermitian");

  ExactHermitianMatrix w = m;
  PositivityReport rep;
  rep.tolerance_used = 0;
  LeadingMinors minors;
  mpq_class minor = 1;
  for (Eigen::Index k = 0; k < n; ++k) {
    const mpq_class pivot = w(k, k).re;
    minor *= pivot;
    minors.values.push_back(minor.get_d());
    minors.signs.push_back(sgn(minor));
    if (sgn(pivot) <= 0) {
      rep.verdict = Verdict::NotPositiveDefinite;
      rep.certificate = std::move(minors);
      return rep;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      if (w(i, k).is_zero()) continue;
      const GaussianRational f = w(i, k) / w(k, k);
      for (Eigen::Index j = k + 1; j < n; ++j) w(i, j) -= f * w(k, j);
    }
  }
  rep.verdict = Verdict::PositiveDefinite;
  rep.certificate = std::move(minors);
  return rep;
}

PositivityReport is_positive_definite(const HermitianMatrix<double>& m, DecisionMode mode, double tol) {
  if (mode == DecisionMode::Floating) return is_positive_definite(m, tol);
  for (Eigen::Index i = 0; i < m.size(); ++i)
    if (!std::isfinite(m(i).real()) || !std::isfinite(m(i).imag()))
      throw std::invalid_argument("is_positive_definite: non-finite entry");
  ExactHermitianMatrix e(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) e(i, j) = GaussianRational(mpq_class(m(i, j).real()), mpq_class(m(i, j).imag()));
  return is_positive_definite(e);
}

}  // namespace pdisk
