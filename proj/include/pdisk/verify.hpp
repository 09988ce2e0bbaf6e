#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "pdisk/core.hpp"

namespace pdisk {

struct CheckOutcome {
  std::string suite;
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_counterexample;

  bool passed() const { return failures == 0; }
};

struct VerifyOptions {
  std::string suite = "all";
  int nmax = 0;  ///< 0 selects the suite default
  std::uint64_t seed = 20240611;
};

/// core, symmetric, orthopoly, radius, triangle.
const std::vector<std::string>& verification_suites();
/// Default and largest accepted nmax per suite (triangle ignores nmax).
int default_nmax(const std::string& suite);
int max_nmax(const std::string& suite);

/// Runs the property suites; throws std::invalid_argument for an unknown
/// suite or an nmax outside the supported range.
std::vector<CheckOutcome> run_verification(const VerifyOptions& options);

/// n centers uniform in the unit square, pairwise at least min_separation
/// apart, with admissible radii u_k * (nearest distance), u_k in (0.05, 0.95).
DiskCollection<double> random_admissible_collection(std::mt19937_64& rng, int n, double min_separation = 0.1);
/// Smallest pairwise center distance.
double min_pairwise_distance(const DiskCollection<double>& c);

/// Real parts of the leading principal minors of a Hermitian matrix.
std::vector<double> leading_minors(const HermitianMatrix<double>& m);

}  // namespace pdisk
