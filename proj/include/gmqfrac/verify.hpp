#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gmqfrac {

struct CheckResult {
  std::string name;
  bool passed = false;
  double measured = 0.0;   // worst deviation found
  double tolerance = 0.0;
  std::string detail;
};

/// Worst relative deviation between the brute-force hypersingular integral
/// of the GMQ basis and its closed form, over d in {1,2},
/// alpha in {0.4, 0.8, 1, 1.2, 1.6} (standard basis skips d = alpha = 1)
/// and `offsets` seeded random offsets and shape parameters per pair.
CheckResult check_identity(bool alternative, int offsets, std::uint64_t seed, double tol = 1e-4);

/// Gauss-Legendre exactness on monomials of degree <= 2K-1, K = 1..32.
CheckResult check_gauss_exactness(double tol = 1e-13);

/// 2F1 against -log(1-z)/z and (1-z)^{-a} on parameter grids.
CheckResult check_hypergeometric(double tol = 1e-10);

/// Recovery of a manufactured coefficient vector from S (N <= 50, eps = 1,
/// kappa_1(S) <= 1e6).
CheckResult check_linear_consistency(std::uint64_t seed, double tol = 1e-10);

/// Tail quadrature against the adaptive tail oracle at seeded configurations.
CheckResult check_tail_quadrature(std::uint64_t seed, double tol = 1e-7);

/// Everything above with quick settings; used by `gmqfrac verify`.
std::vector<CheckResult> run_verification(std::uint64_t seed);

}  // namespace gmqfrac
