#pragma once

#include "dharm/quadrature.hpp"
#include "dharm/serialization.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dharm::verify {

enum class OutputFormat { json, table };

/// Settings shared by every verification check.
struct RunConfig {
  /// Coefficients at or below this magnitude are dropped from expansions.
  double prune_tolerance = kDefaultPruneTolerance;
  /// Relative tolerance of the Gram-matrix checks. Unset: 1e-9 for scalar
  /// harmonics and 1e-8 for d-tensors.
  std::optional<double> quadrature_tolerance;
  /// Step of the first-order finite-difference operators.
  double fd_step = 1e-5;
  /// Rule of the scalar Gram matrix.
  QuadratureSpec quadrature{};
  std::uint64_t seed = 20240607;
  OutputFormat format = OutputFormat::json;

  /// Throws std::invalid_argument unless every tolerance and step is positive
  /// and every quadrature order is at least 2.
  void validate() const;

  /// Keys: "seed", "format", "tolerances": {"prune", "verify", "fd_step"},
  /// "quadrature": {"gauss_order", "phi_points", "beta_points"}. Missing keys
  /// keep their defaults; unknown keys are rejected.
  static RunConfig from_json(const Json& j);
  Json to_json() const;
};

struct CheckResult {
  std::string id;
  /// Acceptance criterion (1-14) the check belongs to; 0 for supporting checks.
  int criterion = 0;
  bool passed = false;
  /// Measured error (largest deviation, or number of mismatches for exact checks).
  double error = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

struct Check {
  std::string id;
  int criterion = 0;
  std::function<CheckResult(const RunConfig&)> run;
};

/// "coupling", "scalar", "dtensor", "geometry", "finsler".
std::vector<std::string> suite_names();
/// Checks of one suite, or of every suite for "all". Throws
/// std::invalid_argument for an unknown suite name.
std::vector<Check> suite_checks(std::string_view suite);

/// Runs the checks (concurrently when `threads` > 1) and returns the results
/// sorted by id. An exception inside a check becomes a failed result.
std::vector<CheckResult> run_checks(const std::vector<Check>& checks, const RunConfig& config, unsigned threads = 0);
std::vector<CheckResult> run_suite(std::string_view suite, const RunConfig& config, unsigned threads = 0);

/// {"suite", "config", "checks": [...], "summary": {"passed", "failed"}}.
Json report_json(std::string_view suite, const RunConfig& config, const std::vector<CheckResult>& results);
std::string report_table(const std::vector<CheckResult>& results);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace dharm::verify
