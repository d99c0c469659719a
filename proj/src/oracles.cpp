#include "gmqfrac/oracles.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/quadrature/trapezoidal.hpp>
#include <cmath>
#include <numbers>

#include "gmqfrac/errors.hpp"
#include "gmqfrac/specfun.hpp"

namespace gmqfrac {

namespace bq = boost::math::quadrature;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTargetRel = 1e-6;

double sphere_area(int d) { return d == 1 ? 2.0 : 2.0 * kPi; }

void check_dim(int d, double alpha) {
  if (d != 1 && d != 2) {
    throw ConfigError("dimension must be 1 or 2");
  }
  if (!(alpha > 0.0 && alpha < 2.0)) {
    throw ConfigError("alpha must lie in (0, 2)");
  }
}

struct Accum {
  double value = 0.0;
  double error = 0.0;
  void add(double v, double e) {
    value += v;
    error += std::abs(e);
  }
};

// Distance along the ray x + r e at which it leaves the support ball.
double exit_radius(const OracleProfile& v, const Point& x, const Point& e) {
  const Point rel = x - v.center;
  const double b = rel.dot(e);
  const double disc = b * b - rel.squaredNorm() + v.support_radius * v.support_radius;
  return -b + std::sqrt(std::max(disc, 0.0));
}

// int_{r0}^inf v(x + r e) r^{-1-alpha} dr  =  r0^{-alpha} int_0^1 v(x + (r0/t) e) t^{alpha-1} dt.
Accum outer_ray(const OracleProfile& v, const Point& x, const Point& e, double r0, double alpha) {
  double t_lo = 0.0;
  if (std::isfinite(v.support_radius)) {
    const double re = exit_radius(v, x, e);
    if (re <= r0) {
      return {};
    }
    t_lo = r0 / re;
  }
  auto f = [&](double t) {
    // Below 1e-100 the remaining mass is far under the target accuracy.
    if (t < 1e-100) {
      return 0.0;
    }
    const double r = r0 / t;
    return v.value(x + r * e) * std::pow(t, alpha - 1.0);
  };
  bq::tanh_sinh<double> ts(12);
  double err = 0.0;
  double l1 = 0.0;
  const double val = ts.integrate(f, t_lo, 1.0, 1e-10, &err, &l1);
  Accum a;
  a.add(std::pow(r0, -alpha) * val, std::pow(r0, -alpha) * err);
  return a;
}

}  // namespace

double case1_u(int d, const Point& x) { return std::pow(1.0 + x.squaredNorm(), -0.5 * (d + 1)); }

double case1_f(int d, double alpha, const Point& x) {
  check_dim(d, alpha);
  if (!(x.squaredNorm() < 1.0)) {
    throw DomainError("case 1 right-hand side is only tabulated inside the unit ball");
  }
  const double a = 0.5 * (d + alpha);
  return gamma_fn(d + alpha) / gamma_fn(d) * gauss_2f1(a, a + 0.5, 0.5 * d, -x.squaredNorm());
}

CaseValues case1(int d, double alpha, const Point& x) {
  return {case1_u(d, x), case1_f(d, alpha, x)};
}

double case2_u(double p, const Point& x) {
  const double w = 1.0 - x.squaredNorm();
  return w > 0.0 ? std::pow(w, p) : 0.0;
}

double case2_f(int d, double alpha, double p, const Point& x) {
  check_dim(d, alpha);
  if (!(p > 0.0)) {
    throw DomainError("case 2 needs p > 0");
  }
  const double r2 = x.squaredNorm();
  if (!(r2 < 1.0)) {
    throw DomainError("case 2 right-hand side is only available for |x| < 1");
  }
  const double pre = std::pow(2.0, alpha) * gamma_fn(0.5 * (alpha + d)) * gamma_fn(p + 1.0) /
                     (gamma_fn(0.5 * d) * gamma_fn(p + 1.0 - 0.5 * alpha));
  return pre * gauss_2f1(0.5 * (alpha + d), 0.5 * alpha - p, 0.5 * d, r2);
}

CaseValues case2(int d, double alpha, double p, const Point& x) {
  return {case2_u(p, x), case2_f(d, alpha, p, x)};
}

double case2_scaled_u(double p, double l, const Point& x) { return case2_u(p, l * x); }

double case2_scaled_f(int d, double alpha, double p, double l, const Point& x) {
  if (!(l > 0.0)) {
    throw ConfigError("scale must be positive");
  }
  return std::pow(l, alpha) * case2_f(d, alpha, p, l * x);
}

CaseValues case2_scaled(int d, double alpha, double p, double l, const Point& x) {
  return {case2_scaled_u(p, l, x), case2_scaled_f(d, alpha, p, l, x)};
}

OracleProfile OracleProfile::gmq(int d, const Point& c, double eps, double beta, double scale) {
  OracleProfile v;
  v.center = c;
  v.length_scale = eps;
  v.value = [=](const Point& y) {
    return scale * std::pow(eps * eps + (y - c).squaredNorm(), beta);
  };
  v.laplacian = [=](const Point& y) {
    const double g = 1.0 + (y - c).squaredNorm() / (eps * eps);
    const double c1 = 2.0 * d * beta + 4.0 * beta * (beta - 1.0);
    const double c2 = 4.0 * beta * (beta - 1.0);
    return scale * std::pow(eps, 2.0 * beta - 2.0) *
           (c1 * std::pow(g, beta - 1.0) - c2 * std::pow(g, beta - 2.0));
  };
  return v;
}

OracleProfile OracleProfile::compact(int d, double p, double l) {
  OracleProfile v;
  v.support_radius = 1.0 / l;
  v.length_scale = 1.0 / l;
  v.value = [=](const Point& y) {
    const double w = 1.0 - l * l * y.squaredNorm();
    return w > 0.0 ? std::pow(w, p) : 0.0;
  };
  v.laplacian = [=](const Point& y) {
    const double r2 = y.squaredNorm();
    const double w = 1.0 - l * l * r2;
    if (!(w > 0.0)) {
      throw DomainError("compact profile Laplacian requested outside the support");
    }
    return -2.0 * l * l * d * p * std::pow(w, p - 1.0) +
           4.0 * std::pow(l, 4) * p * (p - 1.0) * r2 * std::pow(w, p - 2.0);
  };
  return v;
}

OracleProfile OracleProfile::constant(double value) {
  OracleProfile v;
  v.value = [=](const Point&) { return value; };
  v.laplacian = [](const Point&) { return 0.0; };
  return v;
}

double hypersingular_oracle(const OracleProfile& v, int d, double alpha, const Point& x) {
  check_dim(d, alpha);
  double feature = v.length_scale;
  if (std::isfinite(v.support_radius)) {
    const double gap = v.support_radius - (x - v.center).norm();
    if (!(gap > 0.0)) {
      throw DomainError("oracle point must lie inside the support of the profile");
    }
    feature = std::min(feature, gap);
  }
  const double r0 = 0.5 * std::min(1.0, feature);
  const double delta = 1e-3 * r0;
  const double vx = v.value(x);
  const double lap = v.laplacian(x);
  const double area = sphere_area(d);

  // Angular mean over the sphere of [v(x) - v(x + r e)] + r^2 lap / (2d): O(r^4).
  auto shell = [&](double r) {
    if (d == 1) {
      return (2.0 * vx - v.value(x + Point(r, 0.0)) - v.value(x - Point(r, 0.0))) +
             r * r * lap;
    }
    // The ring lies well inside the smooth region, so a fixed periodic rule
    // converges geometrically; an adaptive one would chase rounding noise.
    constexpr int kRing = 64;
    double s = 0.0;
    for (int m = 0; m < kRing; ++m) {
      const double t = 2.0 * kPi * m / kRing;
      s += vx - v.value(x + r * Point(std::cos(t), std::sin(t)));
    }
    return s * (2.0 * kPi / kRing) + r * r * lap * kPi / 2.0;
  };

  Accum acc;
  {
    auto f = [&](double r) { return shell(r) * std::pow(r, -1.0 - alpha); };
    double err = 0.0;
    const double val = bq::gauss_kronrod<double, 31>::integrate(f, delta, r0, 8, 1e-9, &err);
    acc.add(val, err);
    // Below delta the shell term behaves like C r^4.
    const double c4 = shell(delta) / std::pow(delta, 4.0);
    acc.add(c4 * std::pow(delta, 4.0 - alpha) / (4.0 - alpha), 0.0);
  }
  // Removed quadratic part: -(lap / 2d) |S| r0^{2-alpha} / (2 - alpha).
  acc.add(-lap / (2.0 * d) * area * std::pow(r0, 2.0 - alpha) / (2.0 - alpha), 0.0);
  // Outer region: v(x) |S| r0^{-alpha} / alpha - int v(x+z)|z|^{-d-alpha}.
  acc.add(vx * area * std::pow(r0, -alpha) / alpha, 0.0);
  if (d == 1) {
    for (double sgn : {1.0, -1.0}) {
      const Accum o = outer_ray(v, x, Point(sgn, 0.0), r0, alpha);
      acc.add(-o.value, o.error);
    }
  } else {
    // The ray integral peaks in the direction of the profile center; start
    // the angular interval there so the peak sits at the (refined) ends.
    const Point to_c = v.center - x;
    const double t0 = to_c.norm() > 0.0 ? std::atan2(to_c[1], to_c[0]) : 0.0;
    double ray_err = 0.0;
    auto g = [&](double t) {
      const Accum o = outer_ray(v, x, Point(std::cos(t), std::sin(t)), r0, alpha);
      ray_err = std::max(ray_err, o.error);
      return o.value;
    };
    double err = 0.0;
    const double val =
        bq::gauss_kronrod<double, 21>::integrate(g, t0, t0 + 2.0 * kPi, 12, 1e-8, &err);
    acc.add(-val, err + 2.0 * kPi * ray_err);
  }
  const double result = coeff_c(d, alpha) * acc.value;
  const double est = coeff_c(d, alpha) * acc.error;
  if (!std::isfinite(result) || est > kTargetRel * std::abs(result) + 1e-12) {
    throw ConvergenceError("hypersingular oracle did not reach the target accuracy");
  }
  return result;
}

double tail_oracle(const OracleProfile& v, int d, double alpha, const Point& x) {
  check_dim(d, alpha);
  const double rx = d == 1 ? std::abs(x[0]) : x.norm();
  if (!(rx < 1.0)) {
    throw DomainError("tail oracle needs a point strictly inside the unit ball");
  }
  const double w = 1.0 - rx;
  double total = 0.0;
  double total_err = 0.0;
  auto radial = [&](const Point& e) {
    auto f = [&](double r) {
      const Point y = r * e;
      return v.value(y) * std::pow((x - y).norm(), -d - alpha) * (d == 2 ? r : 1.0);
    };
    double e1 = 0.0;
    const double near =
        bq::gauss_kronrod<double, 31>::integrate(f, 1.0, 1.0 + 4.0 * w + 1.0, 20, 1e-13, &e1);
    bq::exp_sinh<double> es;
    double e2 = 0.0;
    auto far = [&](double u) { return f(2.0 + 4.0 * w + u); };
    const double tail = es.integrate(far, 1e-13, &e2);
    return std::pair{near + tail, e1 + e2};
  };
  if (d == 1) {
    for (double sgn : {1.0, -1.0}) {
      const auto [val, err] = radial(Point(sgn, 0.0));
      total += val;
      total_err += err;
    }
  } else {
    auto g = [&](double t) { return radial(Point(std::cos(t), std::sin(t))).first; };
    total = bq::trapezoidal(g, 0.0, 2.0 * kPi, 1e-12, 18, &total_err);
  }
  const double result = coeff_c(d, alpha) * total;
  if (!std::isfinite(result) ||
      coeff_c(d, alpha) * total_err > kTargetRel * std::abs(result) + 1e-14) {
    throw ConvergenceError("tail oracle did not reach the target accuracy");
  }
  return result;
}

}  // namespace gmqfrac
