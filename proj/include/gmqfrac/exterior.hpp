#pragma once

#include <Eigen/Core>
#include <span>
#include <vector>

#include "gmqfrac/geometry.hpp"
#include "gmqfrac/rbfcore.hpp"
#include "gmqfrac/specfun.hpp"

namespace gmqfrac {

/// Radial profile g(y) = scale * (eps^2 + |y - center|^2)^beta.
struct RadialProfile {
  Point center = Point::Zero();
  double eps = 1.0;
  double beta = 0.0;
  double scale = 1.0;

  static RadialProfile zero() { return {Point::Zero(), 1.0, 0.0, 0.0}; }
  double operator()(const Point& y) const;
};

/// Tail of the fractional Laplacian over the complement of the unit
/// interval/disk, stored as a sum of weighted low-rank products
///   B_phi = sum_b  left_b * diag(weights_b) * right_b.
/// 1D keeps two blocks (right and left half-lines), 2D a single block over
/// the K*M tensor nodes. c_{d,alpha} is folded into the weights.
struct TailFactors {
  struct Block {
    Eigen::MatrixXd left;     // N_interior x Q
    Eigen::VectorXd weights;  // Q
    Eigen::MatrixXd right;    // Q x N
  };
  std::vector<Block> blocks;

  Eigen::MatrixXd reconstruct() const;
};

/// c_{1,alpha} int_{|y|>1} g(y) |x - y|^{-1-alpha} dy with y = +-1/s and a
/// K-point Gauss rule in s. Requires |x| < 1 and 2 beta < alpha.
double tail_profile_1d(double x, const RadialProfile& g, double alpha, int K);

/// 2D analogue: polar coordinates, r = 1/s, K-point Gauss rule in s and the
/// M-point periodic rule in angle.
double tail_profile_2d(const Point& x, const RadialProfile& g, double alpha, int K, int M);

/// Tail of phi_j = (eps^2 + |y - x_j|^2)^{(alpha-1)/2} at x_i.
double tail_entry_1d(double xi, double xj, double eps, const FracParams& p, int K);
double tail_entry_2d(const Point& xi, const Point& xj, double eps, const FracParams& p, int K,
                     int M);

/// Factors of B_phi for all equation points (rows) and all centers (columns).
TailFactors build_tail_factors(const PointSet& ps, const GmqBasis& basis, int K, int M = 64);
/// Same, with rows for arbitrary evaluation points strictly inside the unit ball.
TailFactors build_tail_factors(std::span<const Point> eval, const GmqBasis& basis, int K,
                               int M = 64);

/// Tail of the exterior data g at every equation point (length n_interior).
Eigen::VectorXd exterior_data_correction(const RadialProfile& g, const PointSet& ps, int d,
                                         double alpha, int K, int M = 64);

}  // namespace gmqfrac
