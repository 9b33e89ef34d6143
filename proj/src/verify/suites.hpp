#pragma once

#include "dharm/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

namespace dharm::verify {

std::vector<Check> coupling_checks();
std::vector<Check> scalar_checks();
std::vector<Check> dtensor_checks();
std::vector<Check> geometry_checks();
std::vector<Check> finsler_checks();

// Running maximum of an error together with where it occurred.
struct Worst {
  double error = 0.0;
  std::string where;
  std::size_t cases = 0;

  void update(double e, const std::string& at) {
    ++cases;
    if (!(e <= error)) {  // NaN sticks
      if (std::isnan(error)) return;
      error = e;
      where = at;
    }
  }
};

inline CheckResult make_result(const std::string& id, int criterion, const Worst& w, double tolerance,
                               const std::string& what) {
  CheckResult r;
  r.id = id;
  r.criterion = criterion;
  r.error = w.error;
  r.tolerance = tolerance;
  r.passed = w.error <= tolerance;
  std::ostringstream os;
  os << what << "; " << w.cases << " cases";
  if (!w.where.empty()) os << "; worst at " << w.where;
  r.detail = os.str();
  return r;
}

}  // namespace dharm::verify
