#include "gmqfrac/harness.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>

#include "gmqfrac/errors.hpp"

#ifndef GMQFRAC_GIT_REV
#define GMQFRAC_GIT_REV "unknown"
#endif

namespace gmqfrac {

double rms_error(const Eigen::VectorXd& exact, const Eigen::VectorXd& approx) {
  if (exact.size() != approx.size()) {
    throw ConfigError("rms_error: vectors differ in length");
  }
  const double den = exact.norm();
  if (!(den > 0.0)) {
    throw DomainError("rms_error: exact values have zero norm");
  }
  return (exact - approx).norm() / den;
}

double convergence_rate(double e_prev, double e_cur, double n_prev, double n_cur) {
  return std::log(e_prev / e_cur) / std::log(n_cur / n_prev);
}

void RunReport::set_meta(const std::string& key, const std::string& value) {
  for (auto& kv : meta) {
    if (kv.first == key) {
      kv.second = value;
      return;
    }
  }
  meta.emplace_back(key, value);
}

std::string RunReport::meta_value(const std::string& key) const {
  for (const auto& kv : meta) {
    if (kv.first == key) {
      return kv.second;
    }
  }
  return {};
}

void RunReport::compute_rates() {
  for (std::size_t i = 1; i < rows.size(); ++i) {
    double n0 = static_cast<double>(rows[i - 1].N);
    double n1 = static_cast<double>(rows[i].N);
    if (rate_scale == RateScale::SqrtN) {
      n0 = std::sqrt(n0);
      n1 = std::sqrt(n1);
    }
    rows[i].rate_E = convergence_rate(rows[i - 1].E, rows[i].E, n0, n1);
    rows[i].rate_Ehat = convergence_rate(rows[i - 1].Ehat, rows[i].Ehat, n0, n1);
  }
}

std::string format_number(double v) {
  if (std::isnan(v)) {
    return "NA";
  }
  if (std::isinf(v)) {
    return v > 0 ? "inf" : "-inf";
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6e", v);
  return buf;
}

void RunReport::write_csv(std::ostream& out) const {
  out << "N,E,rate_E,Ehat,rate_Ehat,cond,seconds\n";
  for (const auto& r : rows) {
    out << r.N << ',' << format_number(r.E) << ',' << format_number(r.rate_E) << ','
        << format_number(r.Ehat) << ',' << format_number(r.rate_Ehat) << ','
        << format_number(r.cond) << ',' << format_number(r.seconds) << '\n';
  }
}

void RunReport::write_meta(std::ostream& out) const {
  for (const auto& [k, v] : meta) {
    out << k << " = " << v << '\n';
  }
}

const ReportRow& RunReport::row_for(long N) const {
  for (const auto& r : rows) {
    if (r.N == N) {
      return r;
    }
  }
  throw ConfigError("report has no row for N = " + std::to_string(N));
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) {
    return {};
  }
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::map<std::string, std::string> parse_config(std::istream& in) {
  std::map<std::string, std::string> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) {
      line.erase(hash);
    }
    line = trim(line);
    if (line.empty()) {
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    if (key.empty()) {
      throw ConfigError("config line " + std::to_string(lineno) + ": empty key");
    }
    out[key] = trim(line.substr(eq + 1));
  }
  return out;
}

const char* git_revision() { return GMQFRAC_GIT_REV; }

}  // namespace gmqfrac
