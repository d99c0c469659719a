#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "gmqfrac/oracles.hpp"
#include "gmqfrac/rbfcore.hpp"
#include "gmqfrac/specfun.hpp"

using namespace gmqfrac;
using doctest::Approx;

namespace {

GmqBasis single(int d, double alpha, double eps, const Point& c = Point::Zero()) {
  return GmqBasis({c}, FracParams(d, alpha), eps);
}

double fd_neg_lap(const GmqBasis& b, const Point& x, double h) {
  double s = 0.0;
  for (int k = 0; k < b.d(); ++k) {
    Point e = Point::Zero();
    e[k] = h;
    s += (b.phi(0, x + e) - 2.0 * b.phi(0, x) + b.phi(0, x - e)) / (h * h);
  }
  return -s;
}

}  // namespace

TEST_SUITE("rbfcore") {
  TEST_CASE("phi values") {
    CHECK(single(2, 1.0, 1.0).phi(0, Point::Zero()) == Approx(1.0));
    CHECK(single(2, 1.0, 1.0).phi(0, Point(1, 0)) == Approx(std::pow(2.0, -0.5)));
    CHECK(single(1, 1.5, 2.0).phi(0, Point(1, 0)) == Approx(1.49535).epsilon(1e-5));
    CHECK(single(1, 1.5, 2.0).phi(0, Point(1, 0)) == Approx(std::pow(5.0, 0.25)).epsilon(1e-15));
  }

  TEST_CASE("psi values") {
    CHECK(single(2, 1.0, 1.0).psi(0, Point::Zero()) == Approx(1.0));
    CHECK(single(2, 1.0, 1.0).psi(0, Point(0, 1)) == Approx(std::pow(2.0, -1.5)));
    CHECK(single(1, 0.5, 1.0).psi(0, Point(2, 0)) == Approx(0.29907).epsilon(1e-5));
  }

  TEST_CASE("exponents") {
    const GmqBasis b = single(2, 0.8, 0.7);
    CHECK(b.beta() == Approx(-0.6));
    CHECK(b.kind() == GmqBasis::Kind::Standard);
    const GmqBasis a = GmqBasis::alternative({Point::Zero()}, 2, 1.0, 1.0);
    CHECK(a.beta() == Approx(-1.5));
    CHECK(a.kind() == GmqBasis::Kind::Alternative);
  }

  TEST_CASE("fractional Laplacian closed form") {
    CHECK(single(2, 1.0, 1.0).frac_lap_phi(0, Point::Zero()) == Approx(1.0));
    CHECK(single(2, 1.0, 1.0).frac_lap_phi(0, Point(1, 0)) == Approx(std::pow(2.0, -1.5)));
    const GmqBasis b = single(1, 0.4, 1.5, Point(0.1, 0));
    const Point x(0.4, 0);
    CHECK(b.frac_lap_phi(0, x) ==
          Approx(std::pow(1.5, 0.4) * coeff_mu(1, 0.4) * b.psi(0, x)).epsilon(1e-14));
  }

  TEST_CASE("fractional Laplacian against the hypersingular oracle") {
    const GmqBasis b = single(1, 0.4, 1.5);
    const Point x(0.3, 0);
    const double ref =
        hypersingular_oracle(OracleProfile::gmq(1, Point::Zero(), 1.5, b.beta()), 1, 0.4, x);
    CHECK(b.frac_lap_phi(0, x) == Approx(ref).epsilon(1e-5));
  }

  TEST_CASE("oracle agreement at random samples") {
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> ua(0.2, 1.8), uo(-1.2, 1.2), ue(0.5, 2.0);
    for (int d : {1, 2}) {
      for (int s = 0; s < 20; ++s) {
        double alpha = ua(rng);
        if (d == 1 && std::abs(alpha - 1.0) < 0.05) {
          alpha += 0.1;  // alpha = d makes phi constant
        }
        const double eps = ue(rng);
        const Point x(uo(rng), d == 2 ? uo(rng) : 0.0);
        const GmqBasis b = single(d, alpha, eps);
        const double ref =
            hypersingular_oracle(OracleProfile::gmq(d, Point::Zero(), eps, b.beta()), d, alpha, x);
        CAPTURE(d);
        CAPTURE(alpha);
        CAPTURE(eps);
        CHECK(b.frac_lap_phi(0, x) == Approx(ref).epsilon(1e-5));
      }
    }
  }

  TEST_CASE("alternative identity") {
    const GmqBasis a = GmqBasis::alternative({Point::Zero()}, 2, 1.0, 1.0);
    CHECK(a.frac_lap_phi_alt(0, Point::Zero()) == Approx(2.0));
    const GmqBasis a1 = GmqBasis::alternative({Point::Zero()}, 1, 1.3, 0.9);
    for (double off : {0.0, 0.35, 1.1}) {
      const Point x(off, 0);
      const double ref = hypersingular_oracle(
          OracleProfile::gmq(1, Point::Zero(), 0.9, a1.beta()), 1, 1.3, x);
      CHECK(a1.frac_lap_phi_alt(0, x) == Approx(ref).epsilon(1e-5));
    }
  }

  TEST_CASE("classical Laplacian") {
    const GmqBasis flat = GmqBasis::with_exponent({Point::Zero()}, 2, 1.0, 1.0, 0.0);
    CHECK(flat.classical_lap_phi(0, Point(0.3, 0.2)) == 0.0);
    // beta = 1 via the free exponent: -Laplacian of (1 + x^2) in 1D is -2
    const GmqBasis poly = GmqBasis::with_exponent({Point::Zero()}, 1, 0.5, 1.0, 1.0);
    CHECK(poly.classical_lap_phi(0, Point(0.7, 0)) == Approx(-2.0));
    const GmqBasis b = single(2, 1.0, 1.0);
    const Point x(0.3, 0.4);
    CHECK(b.classical_lap_phi(0, x) == Approx(fd_neg_lap(b, x, 1e-4)).epsilon(1e-6));
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int k = 0; k < 10; ++k) {
      const GmqBasis g = single(2, 0.6, 0.8, Point(u(rng), u(rng)));
      const Point y(u(rng), u(rng));
      CHECK(g.classical_lap_phi(0, y) == Approx(fd_neg_lap(g, y, 1e-4)).epsilon(1e-6));
      const GmqBasis g1 = single(1, 1.4, 1.2, Point(u(rng), 0));
      const Point y1(u(rng), 0);
      CHECK(g1.classical_lap_phi(0, y1) == Approx(fd_neg_lap(g1, y1, 1e-4)).epsilon(1e-6));
    }
  }

  TEST_CASE("gradient") {
    const GmqBasis b = single(2, 1.0, 1.0);
    CHECK(b.grad_phi(0, Point::Zero()).norm() == 0.0);
    const Point g = b.grad_phi(0, Point(1, 0));
    CHECK(g[0] == Approx(-std::pow(2.0, -1.5)));  // (alpha - d) = -1 times 2^(-3/2)
    CHECK(g[1] == 0.0);
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const double h = 1e-6;
    for (int k = 0; k < 20; ++k) {
      const GmqBasis r = single(2, 1.3, 0.6, Point(u(rng), u(rng)));
      const Point x(u(rng), u(rng));
      const Point gr = r.grad_phi(0, x);
      for (int c = 0; c < 2; ++c) {
        Point e = Point::Zero();
        e[c] = h;
        const double fd = (r.phi(0, x + e) - r.phi(0, x - e)) / (2 * h);
        CHECK(gr[c] == Approx(fd).epsilon(1e-7).scale(1.0));
      }
    }
  }

  TEST_CASE("translation invariance") {
    const Point shift(0.37, -0.81);
    const Point c(0.2, 0.1), x(-0.4, 0.5);
    const GmqBasis a = single(2, 1.2, 0.9, c);
    const GmqBasis b = single(2, 1.2, 0.9, c + shift);
    CHECK(a.frac_lap_phi(0, x) == Approx(b.frac_lap_phi(0, x + shift)).epsilon(1e-14));
    CHECK(a.classical_lap_phi(0, x) == Approx(b.classical_lap_phi(0, x + shift)).epsilon(1e-14));
  }

  TEST_CASE("rotation invariance") {
    const GmqBasis b = single(2, 0.8, 1.3);
    const Point x(0.6, -0.25);
    for (double t : {0.3, 1.1, 2.5, 4.0}) {
      const Point y(std::cos(t) * x[0] - std::sin(t) * x[1],
                    std::sin(t) * x[0] + std::cos(t) * x[1]);
      CHECK(b.frac_lap_phi(0, y) == Approx(b.frac_lap_phi(0, x)).epsilon(1e-13));
      CHECK(b.phi(0, y) == Approx(b.phi(0, x)).epsilon(1e-13));
      CHECK(b.classical_lap_phi(0, y) == Approx(b.classical_lap_phi(0, x)).epsilon(1e-13));
      CHECK(b.grad_phi(0, y).norm() == Approx(b.grad_phi(0, x).norm()).epsilon(1e-13));
    }
  }

  TEST_CASE("scaling law") {
    // phi_eps(x) = eps^(2 beta) Phi(x / eps), so its fractional Laplacian is
    // eps^(2 beta - alpha) times the unit-shape field at x / eps
    for (int d : {1, 2}) {
      for (double alpha : {0.4, 1.2, 1.6}) {
        const GmqBasis unit = single(d, alpha, 1.0);
        for (double eps : {2.0, 1.0, 0.5, 0.25}) {
          const GmqBasis b = single(d, alpha, eps);
          const Point x(0.3, d == 2 ? -0.2 : 0.0);
          const double scaled =
              std::pow(eps, 2 * b.beta() - alpha) * unit.frac_lap_phi(0, x / eps);
          CHECK(b.frac_lap_phi(0, x) == Approx(scaled).epsilon(1e-12));
        }
      }
    }
  }
}
