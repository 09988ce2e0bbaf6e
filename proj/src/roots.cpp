#include "pdisk/roots.hpp"

#include <algorithm>
#include <stdexcept>

#include "integer_prs.hpp"

namespace pdisk {

namespace {

// Sign of sum_j c_j num^j den^(d-j), i.e. of den^d * p(num/den) with den > 0.
int homogeneous_sign(const IntegerCoefficients& c, const mpz_class& num,
                     const std::vector<mpz_class>& den_powers) {
  if (c.empty()) return 0;
  const std::size_t d = c.size() - 1;
  mpz_class acc = c[d];
  for (std::size_t j = d; j-- > 0;) {
    acc *= num;
    acc += c[j] * den_powers[d - j];
  }
  return sgn(acc);
}

std::vector<mpz_class> powers(const mpz_class& base, std::size_t max_exp) {
  std::vector<mpz_class> out(max_exp + 1);
  out[0] = 1;
  for (std::size_t i = 1; i <= max_exp; ++i) out[i] = out[i - 1] * base;
  return out;
}

int count_variations(const std::vector<int>& signs) {
  int changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

RationalPolynomial square_free_part(const RationalPolynomial& p) {
  const RationalPolynomial g = gcd(p, p.derivative());
  return p.divmod(g).first;
}

// A square-free factor together with its Sturm chain.
struct Factor {
  RationalPolynomial poly;
  SturmSequence sturm;
  int multiplicity;
};

struct Candidate {
  RootInterval interval;
  std::size_t factor;
};

// Halves (a, b] keeping the single root of the square-free factor.
void bisect_once(RootInterval& iv, const Factor& f) {
  if (iv.exact()) return;
  const mpq_class mid = iv.midpoint();
  const int s_mid = f.poly.sign_at(mid);
  if (s_mid == 0) {
    iv.lower = iv.upper = mid;
    return;
  }
  const int s_up = f.poly.sign_at(iv.upper);
  if (s_up == 0) {
    iv.lower = iv.upper;
    return;
  }
  if (s_mid == s_up)
    iv.upper = mid;
  else
    iv.lower = mid;
}

void refine_to(RootInterval& iv, const Factor& f, const mpq_class& width) {
  if (!iv.exact() && f.poly.sign_at(iv.upper) == 0) iv.lower = iv.upper;
  while (!iv.exact() && iv.upper - iv.lower > width) bisect_once(iv, f);
}

bool overlaps(const RootInterval& x, const RootInterval& y) {
  // (a, b] semantics; an exact interval is the single point.
  if (x.exact() && y.exact()) return x.lower == y.lower;
  if (x.exact()) return y.lower < x.lower && x.lower <= y.upper;
  if (y.exact()) return x.lower < y.lower && y.lower <= x.upper;
  return x.lower < y.upper && y.lower < x.upper;
}

void isolate_factor(const Factor& f, std::size_t index, const mpq_class& lower, const mpq_class& upper,
                    std::vector<Candidate>& out) {
  struct Piece {
    mpq_class a, b;
    int count;
  };
  std::vector<Piece> stack{{lower, upper, f.sturm.count(lower, upper)}};
  std::vector<Candidate> found;
  while (!stack.empty()) {
    Piece piece = stack.back();
    stack.pop_back();
    if (piece.count == 0) continue;
    if (piece.count == 1) {
      found.push_back({RootInterval{piece.a, piece.b, f.multiplicity}, index});
      continue;
    }
    const mpq_class mid = (piece.a + piece.b) / 2;
    const int left = f.sturm.count(piece.a, mid);
    stack.push_back({piece.a, mid, left});
    stack.push_back({mid, piece.b, piece.count - left});
  }
  out.insert(out.end(), found.begin(), found.end());
}

}  // namespace

int RootIsolation::total_count() const {
  int total = 0;
  for (const auto& iv : intervals) total += iv.multiplicity;
  return total;
}

SturmSequence::SturmSequence(const RationalPolynomial& square_free) {
  if (square_free.is_zero()) throw std::domain_error("Sturm sequence of the zero polynomial");
  chain_.push_back(primitive_part(square_free));
  if (square_free.degree() == 0) return;
  chain_.push_back(primitive_part(square_free.derivative()));
  while (true) {
    IntegerCoefficients r = detail::signed_pseudo_remainder(chain_[chain_.size() - 2], chain_.back());
    detail::primitive(r);
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain_.push_back(std::move(r));
  }
}

int SturmSequence::variations_at(const mpq_class& x) const {
  std::size_t max_deg = 0;
  for (const auto& s : chain_) max_deg = std::max(max_deg, s.size() - 1);
  const auto den_powers = powers(x.get_den(), max_deg);
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& s : chain_) signs.push_back(homogeneous_sign(s, x.get_num(), den_powers));
  return count_variations(signs);
}

int SturmSequence::variations_at_minus_infinity() const {
  std::vector<int> signs;
  for (const auto& s : chain_) {
    int sg = sgn(s.back());
    if ((s.size() - 1) % 2 == 1) sg = -sg;
    signs.push_back(sg);
  }
  return count_variations(signs);
}

int SturmSequence::variations_at_plus_infinity() const {
  std::vector<int> signs;
  for (const auto& s : chain_) signs.push_back(sgn(s.back()));
  return count_variations(signs);
}

int SturmSequence::count(const mpq_class& a, const mpq_class& b) const {
  if (!(a < b)) return 0;
  return variations_at(a) - variations_at(b);
}

int SturmSequence::sign_at(const mpq_class& x) const {
  const auto den_powers = powers(x.get_den(), chain_.front().size() - 1);
  return homogeneous_sign(chain_.front(), x.get_num(), den_powers);
}

mpq_class cauchy_root_bound(const RationalPolynomial& p) {
  if (p.degree() < 1) return 1;
  mpq_class m = 0;
  const mpq_class lead = abs(p.leading());
  for (int k = 0; k < p.degree(); ++k) m = std::max(m, mpq_class(abs(p.coefficient(k)) / lead));
  mpq_class bound = m + 1;
  // round up to an integer so bisection points stay short
  mpz_class ceil_bound = bound.get_num() / bound.get_den() + 1;
  return mpq_class(ceil_bound);
}

RootIsolation isolate_real_roots(const RationalPolynomial& p, const mpq_class& lower, const mpq_class& upper,
                                 double precision) {
  if (p.is_zero()) throw std::domain_error("isolate_real_roots: zero polynomial");
  if (!(precision > 0)) throw std::invalid_argument("isolate_real_roots: precision must be positive");
  if (!(lower < upper)) throw std::invalid_argument("isolate_real_roots: empty range");
  const mpq_class width(precision);

  std::vector<Factor> factors;
  const auto decomposition = square_free_decomposition(p);
  for (std::size_t i = 0; i < decomposition.size(); ++i) {
    if (decomposition[i].degree() < 1) continue;
    factors.push_back({decomposition[i], SturmSequence(decomposition[i]), static_cast<int>(i) + 1});
  }

  std::vector<Candidate> candidates;
  for (std::size_t i = 0; i < factors.size(); ++i) isolate_factor(factors[i], i, lower, upper, candidates);
  for (auto& c : candidates) refine_to(c.interval, factors[c.factor], width);

  // Roots of distinct square-free factors are distinct; shrink until disjoint.
  for (int guard = 0;; ++guard) {
    if (guard > 100000) throw std::runtime_error("isolate_real_roots: failed to separate roots");
    bool clean = true;
    for (std::size_t i = 0; i < candidates.size() && clean; ++i) {
      for (std::size_t j = i + 1; j < candidates.size(); ++j) {
        if (!overlaps(candidates[i].interval, candidates[j].interval)) continue;
        clean = false;
        auto& wider = (candidates[i].interval.upper - candidates[i].interval.lower >
                       candidates[j].interval.upper - candidates[j].interval.lower)
                          ? candidates[i]
                          : candidates[j];
        bisect_once(wider.interval, factors[wider.factor]);
        break;
      }
    }
    if (clean) break;
  }

  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate& a, const Candidate& b) { return a.interval.upper < b.interval.upper; });
  RootIsolation out;
  for (const auto& c : candidates) {
    out.intervals.push_back(c.interval);
    out.refined.push_back(c.interval.midpoint().get_d());
  }
  return out;
}

RootIsolation isolate_real_roots(const RationalPolynomial& p, double precision) {
  const mpq_class bound = cauchy_root_bound(p);
  return isolate_real_roots(p, -bound, bound, precision);
}

std::optional<RootInterval> smallest_root_in(const RationalPolynomial& p, const mpq_class& lower,
                                             const mpq_class& upper, double precision) {
  if (p.is_zero()) throw std::domain_error("smallest_root_in: zero polynomial");
  if (!(precision > 0)) throw std::invalid_argument("smallest_root_in: precision must be positive");
  if (p.degree() < 1 || !(lower < upper)) return std::nullopt;

  const RationalPolynomial sf = square_free_part(p);
  const Factor factor{sf, SturmSequence(sf), 1};
  if (factor.sturm.count(lower, upper) == 0) return std::nullopt;

  RootInterval iv{lower, upper, 1};
  while (factor.sturm.count(iv.lower, iv.upper) > 1) {
    const mpq_class mid = iv.midpoint();
    if (factor.sturm.count(iv.lower, mid) >= 1)
      iv.upper = mid;
    else
      iv.lower = mid;
  }
  refine_to(iv, factor, mpq_class(precision));

  // Multiplicity: the root is shared with the repeated-root part of p.
  RationalPolynomial g = gcd(p, p.derivative());
  while (g.degree() >= 1) {
    const RationalPolynomial g_sf = square_free_part(g);
    const bool shared = iv.exact() ? g_sf.sign_at(iv.lower) == 0
                                   : SturmSequence(g_sf).count(iv.lower, iv.upper) >= 1;
    if (!shared) break;
    ++iv.multiplicity;
    g = gcd(g, g.derivative());
  }
  return iv;
}

}  // namespace pdisk
