// One line per acceptance criterion; exits nonzero when any criterion fails.
#include "dharm/verify.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <vector>

using namespace dharm::verify;

namespace {

const char* const kTitles[] = {
    "",
    "3j/6j symmetries, orthogonality, 6j contraction",
    "scalar harmonics orthonormal (Gram matrix)",
    "relation to Wigner D-functions",
    "reduction to spherical harmonics",
    "eigenvalues and ladder actions of R and B",
    "theta profile solves its ODE",
    "product rule of scalar harmonics",
    "recursive and explicit constructions agree",
    "Kronecker and Levi-Civita constants",
    "transposition and contraction",
    "tensor and scalar products",
    "d-tensor orthonormality",
    "vertical differential",
    "Finsler metric, inverse and momenta",
};

}  // namespace

int main() {
  const RunConfig config;
  const auto results = run_checks(suite_checks("all"), config);

  std::map<int, std::vector<const CheckResult*>> by_criterion;
  for (const auto& r : results)
    if (r.criterion > 0) by_criterion[r.criterion].push_back(&r);

  int failed = 0;
  for (int c = 1; c <= 14; ++c) {
    const auto& checks = by_criterion[c];
    bool ok = !checks.empty();
    double worst = 0.0;
    const CheckResult* worst_check = nullptr;
    for (const CheckResult* r : checks) {
      ok = ok && r->passed;
      // Ratio to the tolerance, so exact counts and tolerances of different scale compare.
      const double ratio = r->tolerance > 0 ? r->error / r->tolerance : (r->error > 0 ? INFINITY : 0.0);
      if (!worst_check || !(ratio <= worst)) {
        worst = ratio;
        worst_check = r;
      }
    }
    if (!ok) ++failed;
    std::printf("criterion %2d: %s  %-48s checks=%zu", c, ok ? "PASS" : "FAIL", kTitles[c], checks.size());
    if (worst_check)
      std::printf("  worst=%s error=%.3g tol=%.3g", worst_check->id.c_str(), worst_check->error, worst_check->tolerance);
    std::printf("\n");
    for (const CheckResult* r : checks)
      if (!r->passed) std::printf("    %s: %s\n", r->id.c_str(), r->detail.c_str());
  }
  std::printf("%d of 14 criteria passed\n", 14 - failed);
  return failed == 0 ? 0 : 1;
}
