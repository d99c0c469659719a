#pragma once

#include <cstddef>
#include <vector>

#include "gmqfrac/geometry.hpp"
#include "gmqfrac/specfun.hpp"

namespace gmqfrac {

/// Generalized multiquadric basis phi_j(x) = (eps^2 + |x - x_j|^2)^beta.
///
/// The standard basis uses beta = (alpha - d)/2, for which
///   (-Delta)^{alpha/2} phi_j = eps^alpha mu_{d,alpha} psi_j,
///   psi_j(x) = (eps^2 + |x - x_j|^2)^{-(alpha+d)/2}.
/// The alternative basis uses beta = (alpha - 2 - d)/2 and stays usable at
/// alpha = d. A free exponent is allowed for the classical Laplacian only.
class GmqBasis {
 public:
  enum class Kind { Standard, Alternative, Free };

  GmqBasis(std::vector<Point> centers, const FracParams& params, double eps);

  static GmqBasis alternative(std::vector<Point> centers, int d, double alpha, double eps);
  static GmqBasis with_exponent(std::vector<Point> centers, int d, double alpha, double eps,
                                double beta);

  Kind kind() const { return kind_; }
  int d() const { return d_; }
  double alpha() const { return alpha_; }
  double eps() const { return eps_; }
  double beta() const { return beta_; }
  std::size_t size() const { return centers_.size(); }
  const std::vector<Point>& centers() const { return centers_; }
  const Point& center(std::size_t j) const { return centers_.at(j); }

  double phi(std::size_t j, const Point& x) const { return phi_r2(r2(j, x)); }
  double psi(std::size_t j, const Point& x) const { return psi_r2(r2(j, x)); }
  /// Full-space fractional Laplacian of phi_j (standard basis only).
  double frac_lap_phi(std::size_t j, const Point& x) const;
  /// eta1 eps^{alpha-2} (eps^2+r^2)^{-(alpha+d)/2} + eta2 eps^alpha (eps^2+r^2)^{-(alpha+d+2)/2}
  /// (alternative basis only).
  double frac_lap_phi_alt(std::size_t j, const Point& x) const;
  /// -Delta phi_j(x). Note the sign.
  double classical_lap_phi(std::size_t j, const Point& x) const { return neg_lap_r2(r2(j, x)); }
  Point grad_phi(std::size_t j, const Point& x) const;

  // Radial forms in terms of r^2 = |x - x_j|^2.
  double phi_r2(double r2) const;
  double psi_r2(double r2) const;
  double neg_lap_r2(double r2) const;

 private:
  GmqBasis(std::vector<Point> centers, int d, double alpha, double eps, double beta, Kind kind);
  double r2(std::size_t j, const Point& x) const { return (x - centers_.at(j)).squaredNorm(); }

  std::vector<Point> centers_;
  int d_;
  double alpha_;
  double eps_;
  double beta_;
  Kind kind_;
  double frac_scale_ = 0.0;  // eps^alpha mu
  EtaPair eta_{0.0, 0.0};
};

}  // namespace gmqfrac
