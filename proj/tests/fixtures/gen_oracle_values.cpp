// Regenerates oracle_values.txt from the Boost-backed brute-force oracles.
//   gen_oracle_values > tests/fixtures/oracle_values.txt
#include <cmath>
#include <cstdio>
#include <string>

#include "gmqfrac/oracles.hpp"

using namespace gmqfrac;

namespace {

void emit(const std::string& key, double v, const char* how) {
  std::printf("%s %.17g  # %s\n", key.c_str(), v, how);
}

std::string fmt(const char* pat, double a, double b = 0, double c = 0, double d = 0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, pat, a, b, c, d);
  return buf;
}

// phi * 1_{|y|<1}: the part of the full-space operator seen from inside the unit ball
OracleProfile truncated(int d, double eps, double beta) {
  OracleProfile full = OracleProfile::gmq(d, Point::Zero(), eps, beta);
  OracleProfile v = full;
  v.support_radius = 1.0;
  v.value = [full](const Point& y) { return y.squaredNorm() < 1.0 ? full.value(y) : 0.0; };
  return v;
}

}  // namespace

int main() {
  std::printf("# Frozen brute-force oracle values. key value  # method\n");
  std::printf("# Produced by gen_oracle_values (Boost.Math adaptive quadrature).\n");

  for (double alpha : {0.4, 1.0, 1.6}) {
    const double beta = (alpha - 2.0) / 2.0;
    emit(fmt("tail2d_origin_a%.1f", alpha),
         tail_oracle(OracleProfile::gmq(2, Point::Zero(), 1.0, beta), 2, alpha, Point::Zero()),
         "tail_oracle, eps=1, center 0, x=0");
  }

  const double cfg1d[5][4] = {{0.3, -0.2, 1.0, 1.2},
                              {-0.55, 0.4, 0.7, 0.4},
                              {0.8, 0.8, 1.5, 0.8},
                              {0.0, -0.9, 0.3, 1.6},
                              {-0.25, 0.1, 2.0, 1.3}};
  for (const auto& c : cfg1d) {
    const double beta = (c[3] - 1.0) / 2.0;
    emit(fmt("tail1d_x%.2f_c%.2f_e%.1f_a%.1f", c[0], c[1], c[2], c[3]),
         tail_oracle(OracleProfile::gmq(1, Point(c[1], 0), c[2], beta), 1, c[3], Point(c[0], 0)),
         "tail_oracle 1D");
  }

  const double pts2d[5][2] = {{0.0, 0.0}, {0.3, -0.4}, {-0.6, 0.2}, {0.1, 0.85}, {0.5, 0.5}};
  for (const auto& p : pts2d) {
    emit(fmt("gtail2d_x%.2f_%.2f", p[0], p[1]),
         tail_oracle(OracleProfile::gmq(2, Point::Zero(), 1.0, -1.5), 2, 1.0, Point(p[0], p[1])),
         "tail_oracle of (1+|x|^2)^(-3/2), alpha=1");
  }

  for (int d : {1, 2}) {
    for (double alpha : {0.6, 1.4}) {
      const double beta = (alpha - d) / 2.0;
      for (double r : {0.0, 0.4}) {
        const Point x = d == 1 ? Point(r, 0) : Point(r * 0.6, -r * 0.8);
        emit(fmt("regional_d%.0f_a%.1f_r%.1f", d, alpha, r),
             hypersingular_oracle(truncated(d, 1.0, beta), d, alpha, x),
             "hypersingular_oracle of phi truncated to the unit ball, eps=1");
      }
    }
  }

  for (int d : {1, 2}) {
    for (double alpha : {0.5, 1.5}) {
      for (double r : {0.0, 0.5}) {
        const Point x = d == 1 ? Point(r, 0) : Point(0, r);
        emit(fmt("case1_d%.0f_a%.1f_r%.1f", d, alpha, r),
             hypersingular_oracle(OracleProfile::gmq(d, Point::Zero(), 1.0, -(d + 1) / 2.0), d,
                                  alpha, x),
             "hypersingular_oracle of (1+|x|^2)^(-(d+1)/2)");
      }
    }
  }

  for (int d : {1, 2}) {
    for (double p : {1.0, 2.0}) {
      for (double alpha : {0.4, 1.2}) {
        const Point x = d == 1 ? Point(0.3, 0) : Point(0.2, 0.1);
        emit(fmt("case2_d%.0f_p%.0f_a%.1f", d, p, alpha),
             hypersingular_oracle(OracleProfile::compact(d, p, 1.0), d, alpha, x),
             "hypersingular_oracle of (1-|x|^2)_+^p");
      }
    }
  }
  for (double x : {0.0, 0.15, 0.3, 0.45}) {
    emit(fmt("case2s_d1_l2_a0.8_x%.2f", x),
         hypersingular_oracle(OracleProfile::compact(1, 0.8, 2.0), 1, 0.8, Point(x, 0)),
         "hypersingular_oracle of (1-|2x|^2)_+^0.8");
  }
  return 0;
}
