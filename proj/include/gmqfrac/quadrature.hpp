#pragma once

#include <vector>

namespace gmqfrac {

/// Gauss-Legendre rule on (0, 1). Nodes are strictly increasing and the
/// weights sum to 1.
struct QuadRule1D {
  std::vector<double> nodes;
  std::vector<double> weights;

  int order() const { return static_cast<int>(nodes.size()); }

  template <class F>
  double integrate(F&& f) const {
    double acc = 0.0;
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      acc += weights[k] * f(nodes[k]);
    }
    return acc;
  }
};

/// Rectangle rule on [0, 2pi): angles 2pi(m-1)/M, uniform weight 2pi/M.
struct PeriodicRule {
  std::vector<double> angles;
  double weight = 0.0;

  int order() const { return static_cast<int>(angles.size()); }

  template <class F>
  double integrate(F&& f) const {
    double acc = 0.0;
    for (double theta : angles) {
      acc += f(theta);
    }
    return weight * acc;
  }
};

/// K-point Gauss-Legendre rule mapped to (0, 1), 1 <= K <= 512.
/// Nodes come from Newton iteration on P_K started at Chebyshev-type guesses.
QuadRule1D gauss_legendre_01(int K);

/// M-point periodic rectangle rule on [0, 2pi), M >= 1.
PeriodicRule periodic_rule(int M);

}  // namespace gmqfrac
