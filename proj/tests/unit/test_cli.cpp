#include "cli.hpp"
#include "dharm/serialization.hpp"

#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "dharm");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = dharm::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("eval scalar") {
  const Outcome o = run({"eval", "scalar", "l=1", "m=0", "n=0", "theta=0"});
  REQUIRE(o.code == dharm::cli::kExitOk);
  const auto j = dharm::Json::parse(o.out);
  CHECK(j.at("value")[0].get<double>() == doctest::Approx(std::sqrt(3.0)));
  const Outcome flags = run({"eval", "scalar", "--l", "1", "--m", "0", "--n", "0", "--theta", "0"});
  CHECK(flags.out == o.out);
}

TEST_CASE("eval dtensor Kronecker") {
  const Outcome o = run({"--format", "table", "eval", "dtensor", "0|1,0;0,0;v,c", "--scale", "-sqrt(3)"});
  REQUIRE(o.code == dharm::cli::kExitOk);
  CHECK(o.out.find("0|1,0;0,0;v,c") != std::string::npos);
  const Outcome j = run({"eval", "dtensor", "--sig", "0|1,0;0,0;v,c", "--scale", "-sqrt(3)"});
  const auto comps = dharm::Json::parse(j.out).at("value").at("components");
  CHECK(comps[4][0].get<double>() == doctest::Approx(1.0));
  CHECK(std::abs(comps[1][0].get<double>()) < 1e-15);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == dharm::cli::kExitUsage);
  CHECK(run({"eval", "scalar", "l=1", "m=2", "n=0"}).code == dharm::cli::kExitUsage);
  CHECK(run({"eval", "dtensor", "0|2;0,0;v"}).code == dharm::cli::kExitUsage);
  CHECK(run({"verify", "nope"}).code == dharm::cli::kExitUsage);
  CHECK(run({"--format", "xml", "verify", "geometry"}).code == dharm::cli::kExitUsage);
  const Outcome bad = run({"finsler", "--model", "rho^3", "--task", "metric"});
  CHECK(bad.code == dharm::cli::kExitUsage);
  CHECK(bad.err.find("error") != std::string::npos);
}

TEST_CASE("verify exit codes") {
  CHECK(run({"verify", "geometry"}).code == dharm::cli::kExitOk);
  // No Gram matrix meets a tolerance this tight.
  CHECK(run({"--tol-verify", "1e-30", "verify", "scalar"}).code == dharm::cli::kExitFailure);
}

TEST_CASE("finsler inverse reports the identity defect") {
  const Outcome o = run({"finsler", "--model", "non-quadratic", "--task", "inverse", "--rho", "0.5,1", "--z", "0.3"});
  REQUIRE(o.code == dharm::cli::kExitOk);
  const auto j = dharm::Json::parse(o.out);
  const auto& samples = j.at("field").at("samples");
  REQUIRE(samples.size() == 2);
  for (const auto& s : samples) CHECK(s.at("g_ginv_identity_error").get<double>() < 1e-8);
}
