#include "gmqfrac/rbfcore.hpp"

#include <cmath>

#include "gmqfrac/errors.hpp"

namespace gmqfrac {

GmqBasis::GmqBasis(std::vector<Point> centers, int d, double alpha, double eps, double beta,
                   Kind kind)
    : centers_(std::move(centers)), d_(d), alpha_(alpha), eps_(eps), beta_(beta), kind_(kind) {
  if (!(eps > 0.0) || !std::isfinite(eps)) {
    throw ConfigError("shape parameter eps must be positive");
  }
  if (d != 1 && d != 2) {
    throw ConfigError("basis dimension must be 1 or 2");
  }
  if (kind_ == Kind::Standard) {
    frac_scale_ = std::pow(eps_, alpha_) * coeff_mu(d_, alpha_);
  } else if (kind_ == Kind::Alternative) {
    eta_ = coeff_eta(d_, alpha_);
  }
}

GmqBasis::GmqBasis(std::vector<Point> centers, const FracParams& params, double eps)
    : GmqBasis(std::move(centers), params.d(), params.alpha(), eps,
               0.5 * (params.alpha() - params.d()), Kind::Standard) {}

GmqBasis GmqBasis::alternative(std::vector<Point> centers, int d, double alpha, double eps) {
  if (!(alpha > 0.0 && alpha < 2.0)) {
    throw ConfigError("alpha must lie in (0, 2)");
  }
  return GmqBasis(std::move(centers), d, alpha, eps, 0.5 * (alpha - 2.0 - d), Kind::Alternative);
}

GmqBasis GmqBasis::with_exponent(std::vector<Point> centers, int d, double alpha, double eps,
                                 double beta) {
  return GmqBasis(std::move(centers), d, alpha, eps, beta, Kind::Free);
}

double GmqBasis::phi_r2(double r2) const { return std::pow(eps_ * eps_ + r2, beta_); }

double GmqBasis::psi_r2(double r2) const {
  return std::pow(eps_ * eps_ + r2, -0.5 * (alpha_ + d_));
}

double GmqBasis::frac_lap_phi(std::size_t j, const Point& x) const {
  if (kind_ != Kind::Standard) {
    throw ConfigError("frac_lap_phi needs the standard exponent (alpha - d)/2");
  }
  return frac_scale_ * psi(j, x);
}

double GmqBasis::frac_lap_phi_alt(std::size_t j, const Point& x) const {
  if (kind_ != Kind::Alternative) {
    throw ConfigError("frac_lap_phi_alt needs the exponent (alpha - 2 - d)/2");
  }
  const double g = eps_ * eps_ + r2(j, x);
  const double e = -0.5 * (alpha_ + d_);
  return eta_.first * std::pow(eps_, alpha_ - 2.0) * std::pow(g, e) +
         eta_.second * std::pow(eps_, alpha_) * std::pow(g, e - 1.0);
}

double GmqBasis::neg_lap_r2(double r2) const {
  // Unit-shape identity in z = (x - x_j)/eps, then the eps^{2 beta - 2} factor.
  const double b = beta_;
  const double g = 1.0 + r2 / (eps_ * eps_);
  const double c1 = 2.0 * d_ * b + 4.0 * b * (b - 1.0);
  const double c2 = 4.0 * b * (b - 1.0);
  const double unit = -c1 * std::pow(g, b - 1.0) + c2 * std::pow(g, b - 2.0);
  return std::pow(eps_, 2.0 * b - 2.0) * unit;
}

Point GmqBasis::grad_phi(std::size_t j, const Point& x) const {
  const Point diff = x - centers_.at(j);
  const double g = eps_ * eps_ + diff.squaredNorm();
  return (2.0 * beta_ * std::pow(g, beta_ - 1.0)) * diff;
}

}  // namespace gmqfrac
