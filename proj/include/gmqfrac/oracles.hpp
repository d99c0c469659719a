#pragma once

#include <functional>
#include <limits>

#include "gmqfrac/geometry.hpp"

namespace gmqfrac {

struct CaseValues {
  double u = 0.0;
  double f = 0.0;
};

/// u = (1+|x|^2)^{-(d+1)/2},
/// f = Gamma(d+alpha)/Gamma(d) 2F1((d+alpha)/2, (d+alpha+1)/2; d/2; -|x|^2).
/// Valid for every x.
double case1_u(int d, const Point& x);
double case1_f(int d, double alpha, const Point& x);
CaseValues case1(int d, double alpha, const Point& x);

/// u = (1-|x|^2)_+^p and, for |x| < 1,
/// f = 2^alpha Gamma((alpha+d)/2) Gamma(p+1) / (Gamma(d/2) Gamma(p+1-alpha/2))
///     2F1((alpha+d)/2, alpha/2 - p; d/2; |x|^2).
double case2_u(double p, const Point& x);
double case2_f(int d, double alpha, double p, const Point& x);
CaseValues case2(int d, double alpha, double p, const Point& x);

/// u(x) = (1-|l x|^2)_+^p, f(x) = l^alpha (case 2 f)(l x), f needs |l x| < 1.
double case2_scaled_u(double p, double l, const Point& x);
double case2_scaled_f(int d, double alpha, double p, double l, const Point& x);
CaseValues case2_scaled(int d, double alpha, double p, double l, const Point& x);

/// Function handed to the brute-force integrators: value, exact Laplacian
/// and the features that limit the inner ball (smoothness scale, support).
struct OracleProfile {
  std::function<double(const Point&)> value;
  std::function<double(const Point&)> laplacian;
  Point center = Point::Zero();
  double length_scale = 1.0;
  double support_radius = std::numeric_limits<double>::infinity();

  /// scale * (eps^2 + |y - c|^2)^beta.
  static OracleProfile gmq(int d, const Point& c, double eps, double beta, double scale = 1.0);
  /// (1 - |l y|^2)_+^p centered at the origin.
  static OracleProfile compact(int d, double p, double l);
  static OracleProfile constant(double value);
};

/// c_{d,alpha} p.v. int (v(x) - v(y)) / |x-y|^{d+alpha} dy by brute force.
///
/// Inner ball |y-x| < r0 with the quadratic Taylor part removed analytically
/// (the odd part cancels between opposite directions), outer region via
/// t = r0/r on (0, 1] with tanh-sinh, and an adaptive periodic trapezoid in
/// angle in 2D. Throws ConvergenceError if the estimated relative error
/// exceeds 1e-6.
double hypersingular_oracle(const OracleProfile& v, int d, double alpha, const Point& x);

/// c_{d,alpha} int_{|y|>1} v(y) |x-y|^{-d-alpha} dy by adaptive quadrature in
/// r = |y| (Gauss-Kronrod near the unit sphere, exp-sinh to infinity).
double tail_oracle(const OracleProfile& v, int d, double alpha, const Point& x);

}  // namespace gmqfrac
