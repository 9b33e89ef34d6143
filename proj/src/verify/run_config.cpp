#include "dharm/verify.hpp"

#include <stdexcept>

namespace dharm::verify {

namespace {

void require_positive(double x, const char* name) {
  if (!(x > 0.0)) throw std::invalid_argument(std::string(name) + " must be positive");
}

void reject_unknown(const Json& j, std::initializer_list<const char*> keys, const char* where) {
  for (const auto& [key, _] : j.items()) {
    bool known = false;
    for (const char* k : keys) known = known || key == k;
    if (!known) throw std::invalid_argument(std::string("config: unknown key \"") + key + "\" in " + where);
  }
}

}  // namespace

void RunConfig::validate() const {
  require_positive(prune_tolerance, "prune tolerance");
  if (quadrature_tolerance) require_positive(*quadrature_tolerance, "verify tolerance");
  require_positive(fd_step, "finite-difference step");
  quadrature.validate();
}

RunConfig RunConfig::from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("config: expected a JSON object");
  reject_unknown(j, {"seed", "format", "tolerances", "quadrature"}, "config");
  RunConfig c;
  if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("format")) {
    const std::string f = j.at("format").get<std::string>();
    if (f == "json")
      c.format = OutputFormat::json;
    else if (f == "table")
      c.format = OutputFormat::table;
    else
      throw std::invalid_argument("config: format must be \"json\" or \"table\"");
  }
  if (j.contains("tolerances")) {
    const Json& t = j.at("tolerances");
    reject_unknown(t, {"prune", "verify", "fd_step"}, "tolerances");
    if (t.contains("prune")) c.prune_tolerance = t.at("prune").get<double>();
    if (t.contains("verify")) c.quadrature_tolerance = t.at("verify").get<double>();
    if (t.contains("fd_step")) c.fd_step = t.at("fd_step").get<double>();
  }
  if (j.contains("quadrature")) {
    const Json& q = j.at("quadrature");
    reject_unknown(q, {"gauss_order", "phi_points", "beta_points"}, "quadrature");
    if (q.contains("gauss_order")) c.quadrature.gauss_order = q.at("gauss_order").get<int>();
    if (q.contains("phi_points")) c.quadrature.phi_points = q.at("phi_points").get<int>();
    if (q.contains("beta_points")) c.quadrature.beta_points = q.at("beta_points").get<int>();
  }
  c.validate();
  return c;
}

Json RunConfig::to_json() const {
  Json tol{{"prune", prune_tolerance}, {"verify", nullptr}, {"fd_step", fd_step}};
  if (quadrature_tolerance) tol["verify"] = *quadrature_tolerance;
  return Json{{"seed", seed},
              {"format", format == OutputFormat::json ? "json" : "table"},
              {"tolerances", std::move(tol)},
              {"quadrature",
               {{"gauss_order", quadrature.gauss_order},
                {"phi_points", quadrature.phi_points},
                {"beta_points", quadrature.beta_points}}}};
}

}  // namespace dharm::verify
