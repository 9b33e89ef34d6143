#include "suites.hpp"

#include <atomic>
#include <future>
#include <limits>
#include <iomanip>
#include <stdexcept>
#include <thread>

namespace dharm::verify {

std::vector<std::string> suite_names() { return {"coupling", "scalar", "dtensor", "geometry", "finsler"}; }

std::vector<Check> suite_checks(std::string_view suite) {
  if (suite == "coupling") return coupling_checks();
  if (suite == "scalar") return scalar_checks();
  if (suite == "dtensor") return dtensor_checks();
  if (suite == "geometry") return geometry_checks();
  if (suite == "finsler") return finsler_checks();
  if (suite == "all") {
    std::vector<Check> out;
    for (const auto& name : suite_names()) {
      auto part = suite_checks(name);
      out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return out;
  }
  throw std::invalid_argument("unknown suite \"" + std::string(suite) +
                              "\" (expected coupling, scalar, dtensor, geometry, finsler or all)");
}

namespace {

CheckResult run_one(const Check& check, const RunConfig& config) {
  try {
    CheckResult r = check.run(config);
    r.id = check.id;
    r.criterion = check.criterion;
    return r;
  } catch (const std::exception& e) {
    CheckResult r;
    r.id = check.id;
    r.criterion = check.criterion;
    r.passed = false;
    r.error = std::numeric_limits<double>::infinity();
    r.detail = std::string("exception: ") + e.what();
    return r;
  }
}

}  // namespace

std::vector<CheckResult> run_checks(const std::vector<Check>& checks, const RunConfig& config, unsigned threads) {
  config.validate();
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::vector<CheckResult> results(checks.size());
  if (threads == 1) {
    for (std::size_t i = 0; i < checks.size(); ++i) results[i] = run_one(checks[i], config);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::future<void>> workers;
    for (unsigned t = 0; t < std::min<std::size_t>(threads, checks.size()); ++t)
      workers.push_back(std::async(std::launch::async, [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < checks.size();) results[i] = run_one(checks[i], config);
      }));
    for (auto& w : workers) w.get();
  }
  std::sort(results.begin(), results.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return results;
}

std::vector<CheckResult> run_suite(std::string_view suite, const RunConfig& config, unsigned threads) {
  return run_checks(suite_checks(suite), config, threads);
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
}

Json report_json(std::string_view suite, const RunConfig& config, const std::vector<CheckResult>& results) {
  Json checks = Json::array();
  std::size_t passed = 0;
  for (const auto& r : results) {
    passed += r.passed;
    Json error = std::isfinite(r.error) ? Json(r.error) : Json(nullptr);
    checks.push_back(Json{{"id", r.id},
                          {"criterion", r.criterion},
                          {"passed", r.passed},
                          {"error", std::move(error)},
                          {"tolerance", r.tolerance},
                          {"detail", r.detail}});
  }
  return Json{{"suite", suite},
              {"config", config.to_json()},
              {"checks", std::move(checks)},
              {"summary", {{"passed", passed}, {"failed", results.size() - passed}}}};
}

std::string report_table(const std::vector<CheckResult>& results) {
  std::size_t width = 5;
  for (const auto& r : results) width = std::max(width, r.id.size());
  std::ostringstream os;
  os << std::left << std::setw(static_cast<int>(width)) << "check" << "  crit  result  " << std::setw(11) << "error"
     << "  " << std::setw(11) << "tolerance" << "  detail\n";
  std::size_t passed = 0;
  for (const auto& r : results) {
    passed += r.passed;
    os << std::left << std::setw(static_cast<int>(width)) << r.id << "  " << std::setw(4)
       << (r.criterion ? std::to_string(r.criterion) : "-") << "  " << (r.passed ? "PASS  " : "FAIL  ") << "  "
       << std::scientific << std::setprecision(3) << std::setw(11) << r.error << "  " << std::setw(11) << r.tolerance
       << "  " << r.detail << '\n';
    os << std::defaultfloat;
  }
  os << passed << " passed, " << results.size() - passed << " failed\n";
  return os.str();
}

}  // namespace dharm::verify
