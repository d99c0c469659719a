#include "gmqfrac/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "gmqfrac/errors.hpp"

namespace gmqfrac {

namespace {

constexpr double kPi = std::numbers::pi;

bool is_nonpositive_integer(double x) {
  return x <= 0.0 && x == std::nearbyint(x);
}

// Godfrey's coefficients for g = 7, n = 9.
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

double lanczos(double x) {
  // x >= 1/2
  const double z = x - 1.0;
  double acc = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) {
    acc += kLanczos[i] / (z + static_cast<double>(i));
  }
  const double t = z + 7.5;
  // Split the power to keep t^(z+1/2) finite up to x ~ 170.
  const double half = std::pow(t, 0.5 * (z + 0.5));
  return std::sqrt(2.0 * kPi) * half * (half * std::exp(-t)) * acc;
}

constexpr int kMaxTerms = 10000;
constexpr double kSeriesTol = 1e-14;

}  // namespace

FracParams::FracParams(int d, double alpha) : d_(d), alpha_(alpha) {
  if (d != 1 && d != 2) {
    throw ConfigError("dimension must be 1 or 2, got " + std::to_string(d));
  }
  if (!(alpha > 0.0 && alpha < 2.0)) {
    throw ConfigError("fractional order must lie in (0, 2), got " +
                      std::to_string(alpha));
  }
  if (d == 1 && alpha == 1.0) {
    throw ConfigError("alpha = d = 1 is excluded: d - alpha is even");
  }
}

double gamma_fn(double x) {
  if (is_nonpositive_integer(x)) {
    throw PoleError("gamma_fn: pole at x = " + std::to_string(x));
  }
  if (x < 0.5) {
    // Reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x).
    return kPi / (std::sin(kPi * x) * lanczos(1.0 - x));
  }
  return lanczos(x);
}

double gauss_2f1_series(double a, double b, double c, double z) {
  if (is_nonpositive_integer(c)) {
    throw PoleError("gauss_2f1: c is a nonpositive integer");
  }
  if (!(z >= 0.0 && z < 1.0)) {
    throw DomainError("gauss_2f1_series: z must lie in [0, 1)");
  }
  double term = 1.0;
  double sum = 1.0;
  int small_run = 0;
  for (int k = 0; k < kMaxTerms; ++k) {
    const double kk = static_cast<double>(k);
    term *= (a + kk) * (b + kk) / ((c + kk) * (kk + 1.0)) * z;
    sum += term;
    if (term == 0.0) {
      return sum;  // a or b is a nonpositive integer: polynomial
    }
    // Two consecutive small terms guard against an accidental near-zero
    // factor (a + k or b + k close to 0).
    if (std::abs(term) <= kSeriesTol * std::abs(sum)) {
      if (++small_run == 2) {
        return sum;
      }
    } else {
      small_run = 0;
    }
  }
  throw ConvergenceError("gauss_2f1: series did not converge in " +
                         std::to_string(kMaxTerms) + " terms");
}

namespace {

double gauss_2f1_series_any(double a, double b, double c, double z) {
  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; term != 0.0; ++k) {
    const double kk = static_cast<double>(k);
    term *= (a + kk) * (b + kk) / ((c + kk) * (kk + 1.0)) * z;
    sum += term;
  }
  return sum;
}

}  // namespace

double gauss_2f1(double a, double b, double c, double z) {
  if (is_nonpositive_integer(c)) {
    throw PoleError("gauss_2f1: c is a nonpositive integer");
  }
  if (!(z < 1.0)) {
    throw DomainError("gauss_2f1: requires z < 1, got " + std::to_string(z));
  }
  if (z == 0.0) {
    return 1.0;
  }
  // Terminating series: summing the polynomial directly avoids the rounding
  // the transformations below introduce.
  if ((is_nonpositive_integer(a) || is_nonpositive_integer(b)) && std::abs(z) < 1.0) {
    return gauss_2f1_series_any(a, b, c, z);
  }
  if (z < 0.0) {
    // Pfaff: 2F1(a,b;c;z) = (1-z)^{-a} 2F1(a, c-b; c; z/(z-1)).
    const double w = z / (z - 1.0);
    return std::pow(1.0 - z, -a) * gauss_2f1(a, c - b, c, w);
  }
  if (z > 0.5) {
    return std::pow(1.0 - z, c - a - b) * gauss_2f1_series(c - a, c - b, c, z);
  }
  return gauss_2f1_series(a, b, c, z);
}

double coeff_c(int dim, double alpha) {
  const double d = dim;
  return std::pow(2.0, alpha) * gamma_fn(0.5 * (alpha + d)) /
         (std::pow(kPi, 0.5 * d) * std::abs(gamma_fn(-0.5 * alpha)));
}

double coeff_mu(int dim, double alpha) {
  const double d = dim;
  return std::pow(2.0, alpha) * gamma_fn(0.5 * d + 0.5 * alpha) /
         gamma_fn(0.5 * d - 0.5 * alpha);
}

EtaPair coeff_eta(int dim, double alpha) {
  const double d = dim;
  if (!(alpha < d + 2.0)) {
    throw DomainError("coeff_eta: requires alpha < d + 2");
  }
  const double denom = gamma_fn(0.5 * d - 0.5 * alpha + 1.0);
  const double eta1 =
      -alpha * std::pow(2.0, alpha - 1.0) * gamma_fn(0.5 * d + 0.5 * alpha) / denom;
  const double eta2 =
      std::pow(2.0, alpha) * gamma_fn(0.5 * d + 0.5 * alpha + 1.0) / denom;
  return {eta1, eta2};
}

}  // namespace gmqfrac
