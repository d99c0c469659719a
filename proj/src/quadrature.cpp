#include "gmqfrac/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "gmqfrac/errors.hpp"

namespace gmqfrac {

namespace {

// Returns P_n(x) and P_n'(x) by the three-term recurrence.
std::pair<double, double> legendre(int n, double x) {
  double p0 = 1.0;
  double p1 = x;
  if (n == 0) {
    return {1.0, 0.0};
  }
  for (int j = 2; j <= n; ++j) {
    const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
    p0 = p1;
    p1 = p2;
  }
  const double dp = n * (x * p1 - p0) / (x * x - 1.0);
  return {p1, dp};
}

}  // namespace

QuadRule1D gauss_legendre_01(int K) {
  if (K < 1 || K > 512) {
    throw ConfigError("gauss_legendre_01: K must lie in [1, 512], got " +
                      std::to_string(K));
  }
  QuadRule1D rule;
  rule.nodes.assign(K, 0.0);
  rule.weights.assign(K, 0.0);

  const int half = (K + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (K + 0.5));
    double dp = 0.0;
    bool converged = false;
    for (int it = 0; it < 100; ++it) {
      auto [p, dpx] = legendre(K, x);
      dp = dpx;
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) <= 1e-15 * std::max(1.0, std::abs(x))) {
        converged = true;
        break;
      }
    }
    if (!converged) {
      throw ConvergenceError("gauss_legendre_01: Newton iteration failed for K = " +
                             std::to_string(K));
    }
    dp = legendre(K, x).second;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    // x is the i-th largest root on (-1, 1); map t = (1 + x) / 2.
    rule.nodes[K - 1 - i] = 0.5 * (1.0 + x);
    rule.nodes[i] = 0.5 * (1.0 - x);
    rule.weights[K - 1 - i] = 0.5 * w;
    rule.weights[i] = 0.5 * w;
  }
  if (K % 2 == 1) {
    rule.nodes[K / 2] = 0.5;
  }
  return rule;
}

PeriodicRule periodic_rule(int M) {
  if (M < 1) {
    throw ConfigError("periodic_rule: M must be positive");
  }
  PeriodicRule rule;
  rule.angles.resize(M);
  for (int m = 0; m < M; ++m) {
    rule.angles[m] = 2.0 * std::numbers::pi * m / M;
  }
  rule.weight = 2.0 * std::numbers::pi / M;
  return rule;
}

}  // namespace gmqfrac
