#include "dharm/verify.hpp"

#include <doctest.h>

#include <algorithm>

using namespace dharm;
using namespace dharm::verify;

TEST_CASE("run configuration from JSON") {
  const RunConfig c = RunConfig::from_json(Json::parse(
      R"({"seed": 7, "format": "table", "tolerances": {"prune": 1e-12, "verify": 1e-6},
          "quadrature": {"gauss_order": 8, "phi_points": 16, "beta_points": 12}})"));
  CHECK(c.seed == 7);
  CHECK(c.format == OutputFormat::table);
  CHECK(c.prune_tolerance == 1e-12);
  CHECK(c.quadrature_tolerance == 1e-6);
  CHECK(c.fd_step == 1e-5);
  CHECK(c.quadrature.gauss_order == 8);
  CHECK(c.quadrature.beta_points == 12);
  CHECK(RunConfig::from_json(c.to_json()).to_json() == c.to_json());
  CHECK_FALSE(RunConfig::from_json(Json::object()).quadrature_tolerance.has_value());
}

TEST_CASE("run configuration rejects bad input") {
  CHECK_THROWS_AS(RunConfig::from_json(Json::parse(R"({"sed": 1})")), std::invalid_argument);
  CHECK_THROWS_AS(RunConfig::from_json(Json::parse(R"({"tolerances": {"prune": 1e-12, "x": 1}})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(RunConfig::from_json(Json::parse(R"({"format": "xml"})")), std::invalid_argument);
  CHECK_THROWS(RunConfig::from_json(Json::parse(R"({"tolerances": {"prune": -1}})")));
  CHECK_THROWS(RunConfig::from_json(Json::parse(R"({"quadrature": {"gauss_order": 1}})")));
  RunConfig c;
  c.fd_step = 0.0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
}

TEST_CASE("suites") {
  const auto names = suite_names();
  CHECK(names == std::vector<std::string>{"coupling", "scalar", "dtensor", "geometry", "finsler"});
  CHECK_THROWS_AS(suite_checks("nope"), std::invalid_argument);
  std::size_t total = 0;
  for (const auto& n : names) total += suite_checks(n).size();
  CHECK(suite_checks("all").size() == total);
  // Every criterion has at least one check.
  const auto all = suite_checks("all");
  for (int c = 1; c <= 14; ++c)
    CHECK(std::any_of(all.begin(), all.end(), [c](const Check& k) { return k.criterion == c; }));
}

TEST_CASE("reports are sorted and do not depend on the thread count") {
  RunConfig c;
  const auto one = run_suite("geometry", c, 1);
  const auto many = run_suite("geometry", c, 4);
  CHECK(std::is_sorted(one.begin(), one.end(), [](const auto& a, const auto& b) { return a.id < b.id; }));
  CHECK(report_json("geometry", c, one).dump() == report_json("geometry", c, many).dump());
  const Json j = report_json("geometry", c, one);
  CHECK(j.at("summary").at("passed").get<int>() + j.at("summary").at("failed").get<int>() == int(one.size()));
  CHECK(report_table(one).find("geometry.charts") != std::string::npos);
}

TEST_CASE("a throwing check becomes a failure") {
  const std::vector<Check> checks{
      {"b.ok", 0, [](const RunConfig&) { return CheckResult{"b.ok", 0, true, 0.0, 1.0, ""}; }},
      {"a.throws", 3, [](const RunConfig&) -> CheckResult { throw std::runtime_error("boom"); }}};
  const auto r = run_checks(checks, RunConfig{}, 2);
  REQUIRE(r.size() == 2);
  CHECK(r[0].id == "a.throws");
  CHECK_FALSE(r[0].passed);
  CHECK(r[0].criterion == 3);
  CHECK(r[0].detail.find("boom") != std::string::npos);
  CHECK(r[1].passed);
  CHECK_FALSE(all_passed(r));
  CHECK(report_json("x", RunConfig{}, r).at("checks")[0].at("error").is_null());
}
