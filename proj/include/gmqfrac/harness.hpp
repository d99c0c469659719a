#pragma once

#include <Eigen/Core>
#include <iosfwd>
#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace gmqfrac {

/// Relative RMS error |exact - approx|_2 / |exact|_2.
double rms_error(const Eigen::VectorXd& exact, const Eigen::VectorXd& approx);

/// log(e_prev / e_cur) / log(n_cur / n_prev).
double convergence_rate(double e_prev, double e_cur, double n_prev, double n_cur);

struct ReportRow {
  long N = 0;
  double E = std::numeric_limits<double>::quiet_NaN();
  double rate_E = std::numeric_limits<double>::quiet_NaN();
  double Ehat = std::numeric_limits<double>::quiet_NaN();
  double rate_Ehat = std::numeric_limits<double>::quiet_NaN();
  double cond = std::numeric_limits<double>::quiet_NaN();
  double seconds = std::numeric_limits<double>::quiet_NaN();
};

/// One sweep over point-set sizes. Missing values print as NA.
struct RunReport {
  enum class RateScale { N, SqrtN };

  std::vector<ReportRow> rows;
  std::vector<std::pair<std::string, std::string>> meta;
  RateScale rate_scale = RateScale::N;

  void set_meta(const std::string& key, const std::string& value);
  std::string meta_value(const std::string& key) const;
  /// Fills rate_E / rate_Ehat from the second row on.
  void compute_rates();
  void write_csv(std::ostream& out) const;
  void write_meta(std::ostream& out) const;
  const ReportRow& row_for(long N) const;
};

/// Scientific notation with 6 significant digits, NA for NaN, inf/-inf kept.
std::string format_number(double v);

/// Flat `key = value` text; `#` starts a comment. Throws ConfigError on
/// malformed lines.
std::map<std::string, std::string> parse_config(std::istream& in);

/// Git revision baked in at configure time.
const char* git_revision();

}  // namespace gmqfrac
