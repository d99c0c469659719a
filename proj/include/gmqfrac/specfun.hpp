#pragma once

namespace gmqfrac {

/// Dimension and fractional order of the operator (-Delta)^{alpha/2}.
///
/// Construction validates 0 < alpha < 2, d in {1, 2}, and rejects d = alpha
/// (d - alpha = 0 is even, where the GMQ pseudo-spectral identity fails).
class FracParams {
 public:
  FracParams(int d, double alpha);

  int d() const { return d_; }
  double alpha() const { return alpha_; }

 private:
  int d_;
  double alpha_;
};

/// Gamma function, Lanczos approximation (g = 7, 9 terms) with the
/// reflection formula for x < 1/2. Throws PoleError at 0, -1, -2, ...
double gamma_fn(double x);

/// Gauss hypergeometric function 2F1(a, b; c; z) for z < 1.
///
/// Summed as a power series with a relative term tolerance of 1e-14 and at
/// most 10,000 terms. For z > 1/2 the Euler transformation
///   2F1(a,b;c;z) = (1-z)^{c-a-b} 2F1(c-a, c-b; c; z)
/// is applied first; for z < 0 the Pfaff transformation maps the argument
/// into [0, 1). Throws DomainError for z >= 1, PoleError when c is a
/// nonpositive integer, ConvergenceError if the budget is exhausted.
double gauss_2f1(double a, double b, double c, double z);

/// Plain power series for 2F1 without any transformation (z in [0, 1)).
/// Exposed for cross-checking the transformed path.
double gauss_2f1_series(double a, double b, double c, double z);

/// c_{d,alpha} = 2^alpha Gamma((alpha+d)/2) / (pi^{d/2} |Gamma(-alpha/2)|),
/// the normalisation of the singular-integral definition.
double coeff_c(int d, double alpha);
inline double coeff_c(const FracParams& p) { return coeff_c(p.d(), p.alpha()); }

/// mu_{d,alpha} = 2^alpha Gamma(d/2 + alpha/2) / Gamma(d/2 - alpha/2).
/// Throws PoleError when d/2 - alpha/2 is a nonpositive integer.
double coeff_mu(int d, double alpha);
inline double coeff_mu(const FracParams& p) { return coeff_mu(p.d(), p.alpha()); }

struct EtaPair {
  double first;
  double second;
};

/// Coefficients of the alternative identity
///   (-Delta)^{alpha/2} Phi_{d,alpha-2} = eta1 Phi_{d,-alpha} + eta2 Phi_{d,-alpha-2}.
/// Defined for alpha < d + 2, including alpha = d.
EtaPair coeff_eta(int d, double alpha);
inline EtaPair coeff_eta(const FracParams& p) { return coeff_eta(p.d(), p.alpha()); }

}  // namespace gmqfrac
