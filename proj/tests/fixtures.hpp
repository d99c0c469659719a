#pragma once
// Frozen oracle values from fixtures/oracle_values.txt.
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

inline double fixture(const std::string& key) {
  static const std::map<std::string, double> table = [] {
    std::map<std::string, double> t;
    std::ifstream in(GMQFRAC_FIXTURES "/oracle_values.txt");
    if (!in) {
      throw std::runtime_error("cannot open oracle_values.txt");
    }
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') {
        continue;
      }
      std::istringstream ls(line);
      std::string k;
      double v;
      if (ls >> k >> v) {
        t[k] = v;
      }
    }
    return t;
  }();
  const auto it = table.find(key);
  if (it == table.end()) {
    throw std::out_of_range("missing fixture " + key);
  }
  return it->second;
}
