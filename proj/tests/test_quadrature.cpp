#include <doctest.h>

#include <cmath>
#include <numbers>
#include <numeric>

#include "gmqfrac/errors.hpp"
#include "gmqfrac/quadrature.hpp"

using namespace gmqfrac;
using doctest::Approx;

TEST_SUITE("quadrature") {
  TEST_CASE("one point rule is the midpoint") {
    const auto r = gauss_legendre_01(1);
    REQUIRE(r.order() == 1);
    CHECK(r.nodes[0] == Approx(0.5));
    CHECK(r.weights[0] == Approx(1.0));
  }

  TEST_CASE("two point rule") {
    const auto r = gauss_legendre_01(2);
    CHECK(r.nodes[0] == Approx(0.5 - 0.5 / std::sqrt(3.0)).epsilon(1e-15));
    CHECK(r.nodes[1] == Approx(0.5 + 0.5 / std::sqrt(3.0)).epsilon(1e-15));
  }

  TEST_CASE("monomial exactness up to degree 2K-1") {
    for (int K : {1, 3, 10, 32, 64}) {
      const auto r = gauss_legendre_01(K);
      for (int p = 0; p <= std::min(2 * K - 1, 60); ++p) {
        CHECK(r.integrate([p](double s) { return std::pow(s, p); }) ==
              Approx(1.0 / (p + 1)).epsilon(1e-13));
      }
    }
  }

  TEST_CASE("nodes increase, lie in (0,1), weights positive and symmetric") {
    for (int K : {5, 10, 11, 128}) {
      const auto r = gauss_legendre_01(K);
      CHECK(std::accumulate(r.weights.begin(), r.weights.end(), 0.0) == Approx(1.0).epsilon(1e-14));
      for (int k = 0; k < K; ++k) {
        CHECK(r.nodes[k] > 0.0);
        CHECK(r.nodes[k] < 1.0);
        CHECK(r.weights[k] > 0.0);
        CHECK(r.nodes[k] + r.nodes[K - 1 - k] == Approx(1.0).epsilon(1e-15));
        if (k > 0) {
          CHECK(r.nodes[k] > r.nodes[k - 1]);
        }
      }
    }
  }

  TEST_CASE("order limits") {
    CHECK_THROWS_AS(gauss_legendre_01(0), ConfigError);
    CHECK_THROWS_AS(gauss_legendre_01(513), ConfigError);
    CHECK_THROWS_AS(periodic_rule(0), ConfigError);
  }

  TEST_CASE("periodic rule integrates trigonometric polynomials exactly") {
    const auto r = periodic_rule(16);
    CHECK(r.integrate([](double) { return 1.0; }) == Approx(2.0 * std::numbers::pi));
    CHECK(std::abs(r.integrate([](double t) { return std::cos(5 * t); })) < 1e-13);
    CHECK(r.integrate([](double t) { return std::cos(3 * t) * std::cos(3 * t); }) ==
          Approx(std::numbers::pi).epsilon(1e-14));
    // Aliasing starts at frequency M.
    CHECK(r.integrate([](double t) { return std::cos(16 * t); }) ==
          Approx(2.0 * std::numbers::pi));
  }
}
