#include "cli.hpp"

#include "dharm/dtensor_algebra.hpp"
#include "dharm/errors.hpp"
#include "dharm/expression.hpp"
#include "dharm/finsler.hpp"
#include "dharm/serialization.hpp"
#include "dharm/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

namespace dharm::cli {

namespace {

struct GlobalOptions {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> format;
  std::optional<int> quad_theta, quad_phi, quad_beta;
  std::optional<double> fd_step, tol_prune, tol_verify;
};

verify::RunConfig load_config(const GlobalOptions& g) {
  verify::RunConfig c;
  if (!g.config_path.empty()) {
    std::ifstream in(g.config_path);
    if (!in) throw std::invalid_argument("cannot open config file \"" + g.config_path + "\"");
    Json j;
    try {
      j = Json::parse(in);
    } catch (const Json::parse_error& e) {
      throw std::invalid_argument("config file \"" + g.config_path + "\" is not valid JSON: " + e.what());
    }
    c = verify::RunConfig::from_json(j);
  }
  if (g.seed) c.seed = *g.seed;
  if (g.format) c.format = *g.format == "table" ? verify::OutputFormat::table : verify::OutputFormat::json;
  if (g.quad_theta) c.quadrature.gauss_order = *g.quad_theta;
  if (g.quad_phi) c.quadrature.phi_points = *g.quad_phi;
  if (g.quad_beta) c.quadrature.beta_points = *g.quad_beta;
  if (g.fd_step) c.fd_step = *g.fd_step;
  if (g.tol_prune) c.prune_tolerance = *g.tol_prune;
  if (g.tol_verify) c.quadrature_tolerance = *g.tol_verify;
  c.validate();
  return c;
}

// "key=value" positional arguments, as an alternative to the named options.
void apply_assignments(const std::vector<std::string>& items, const std::map<std::string, std::string*>& targets,
                       std::vector<std::string>* unnamed) {
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      if (!unnamed) throw std::invalid_argument("expected key=value, got \"" + item + "\"");
      unnamed->push_back(item);
      continue;
    }
    const std::string key = item.substr(0, eq);
    const auto it = targets.find(key);
    if (it == targets.end()) throw std::invalid_argument("unknown key \"" + key + "\" in \"" + item + "\"");
    *it->second = item.substr(eq + 1);
  }
}

double parse_number(const std::string& text, const char* what) {
  try {
    return Expression::parse(text)({});
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string(what) + ": " + e.what());
  }
}

int parse_int(const std::string& text, const char* what) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size())
    throw std::invalid_argument(std::string(what) + " must be an integer (got \"" + text + "\")");
  return value;
}

AnglePoint parse_point(const std::string& theta, const std::string& phi, const std::string& beta) {
  const double t = parse_number(theta, "theta");
  if (!(t >= 0.0 && t <= std::numbers::pi)) throw std::invalid_argument("theta must lie in [0, pi]");
  return AnglePoint::make(t, parse_number(phi, "phi"), parse_number(beta, "beta"));
}

std::vector<double> parse_list(const std::string& text, const char* what) {
  std::vector<double> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) out.push_back(parse_number(item, what));
  if (out.empty()) throw std::invalid_argument(std::string(what) + ": empty list");
  return out;
}

std::string format_complex(std::complex<double> z) {
  std::ostringstream os;
  os << std::setprecision(12) << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  return os.str();
}

std::string render_matrix(const ComponentTensor& t) {
  std::ostringstream os;
  if (t.rank() == 2) {
    for (int a = 0; a < 3; ++a) {
      os << "  ";
      for (int b = 0; b < 3; ++b) os << std::left << std::setw(36) << format_complex(t.at({a, b})) << std::right;
      os << '\n';
    }
    return os.str();
  }
  for (std::size_t i = 0; i < t.size(); ++i) os << "  [" << i << "] " << format_complex(t[i]) << '\n';
  return os.str();
}

void emit(std::ostream& out, const verify::RunConfig& config, const Json& j, const std::string& table) {
  if (config.format == verify::OutputFormat::json)
    out << j.dump(2) << '\n';
  else
    out << table;
}

struct EvalOptions {
  std::string kind;
  std::vector<std::string> positional;
  std::string l = "", m = "", n = "";
  std::string signature;
  std::string theta = "0", phi = "0", beta = "0";
  std::string scale = "1", scale_imag = "0";
};

int cmd_eval(const EvalOptions& o, const verify::RunConfig& config, std::ostream& out) {
  EvalOptions e = o;
  std::vector<std::string> unnamed;
  apply_assignments(e.positional,
                    {{"l", &e.l}, {"m", &e.m}, {"n", &e.n}, {"theta", &e.theta}, {"phi", &e.phi}, {"beta", &e.beta},
                     {"sig", &e.signature}, {"scale", &e.scale}},
                    e.kind == "dtensor" ? &unnamed : nullptr);
  if (!unnamed.empty()) {
    if (unnamed.size() > 1 || !e.signature.empty())
      throw std::invalid_argument("eval dtensor takes exactly one signature");
    e.signature = unnamed.front();
  }
  const AnglePoint p = parse_point(e.theta, e.phi, e.beta);
  const std::complex<double> scale(parse_number(e.scale, "scale"), parse_number(e.scale_imag, "scale-imag"));
  if (e.kind == "scalar") {
    if (e.l.empty() || e.m.empty() || e.n.empty()) throw std::invalid_argument("eval scalar needs l, m and n");
    const AngularTriple t(parse_int(e.l, "l"), parse_int(e.m, "m"), parse_int(e.n, "n"));
    const std::complex<double> value = scale * eval_harmonic(t, p);
    const Json j{{"kind", "scalar"},
                 {"labels", t},
                 {"point", p},
                 {"scale", complex_to_json(scale)},
                 {"value", complex_to_json(value)}};
    std::ostringstream table;
    table << "Y(" << t.l << "," << t.m << "," << t.n << ") at theta=" << p.theta << " phi=" << p.phi
          << " beta=" << p.beta << ": " << format_complex(value) << '\n';
    emit(out, config, j, table.str());
    return kExitOk;
  }
  if (e.signature.empty()) throw std::invalid_argument("eval dtensor needs a signature such as \"0|1,0;0,0;v,c\"");
  const HarmonicSignature sig = HarmonicSignature::parse(e.signature);
  ComponentTensor value = evaluate(sig, p);
  value *= scale;
  const Json j{{"kind", "dtensor"},
               {"labels", sig},
               {"signature", sig.to_string()},
               {"point", p},
               {"scale", complex_to_json(scale)},
               {"value", value}};
  std::ostringstream table;
  table << sig.to_string() << " at theta=" << p.theta << " phi=" << p.phi << " beta=" << p.beta << ":\n"
        << render_matrix(value);
  emit(out, config, j, table.str());
  return kExitOk;
}

int cmd_verify(const std::string& suite, unsigned threads, const verify::RunConfig& config, std::ostream& out) {
  const auto checks = verify::suite_checks(suite);
  const auto results = verify::run_checks(checks, config, threads);
  emit(out, config, verify::report_json(suite, config, results), verify::report_table(results));
  return verify::all_passed(results) ? kExitOk : kExitFailure;
}

struct FinslerOptions {
  std::string model;
  std::string task;
  std::string r = "1", rho = "1", z = "0.5";
  std::string theta = "pi/2", phi = "0", beta = "0";
};

int cmd_finsler(const FinslerOptions& o, const verify::RunConfig& config, std::ostream& out) {
  const LagrangianModel model = model_from_spec(o.model);
  RadialCombination field;
  if (o.task == "momenta")
    field = momenta(model);
  else if (o.task == "metric")
    field = finsler_metric(model);
  else
    field = inverse_metric(model);
  std::vector<std::array<double, 3>> grid;
  for (const double r : parse_list(o.r, "r"))
    for (const double rho : parse_list(o.rho, "rho"))
      for (const double z : parse_list(o.z, "z")) grid.push_back({r, rho, z});
  const AnglePoint angles = parse_point(o.theta, o.phi, o.beta);

  Json j = radial_combination_to_json(field, grid);
  std::ostringstream table;
  table << "model " << model.name() << ", task " << o.task << ", angles theta=" << angles.theta << " phi=" << angles.phi
        << " beta=" << angles.beta << '\n';
  const std::optional<RadialCombination> metric =
      o.task == "inverse" ? std::optional<RadialCombination>(finsler_metric(model)) : std::nullopt;
  Json& samples = j["samples"];
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto [r, rho, z] = grid[i];
    CylindricalChart c;
    c.r = r;
    c.theta = angles.theta;
    c.phi = angles.phi;
    c.rhobar = rho;
    c.zbar = z;
    c.beta = angles.beta;
    const ComponentTensor value = field.evaluate(c);
    samples[i]["components"] = value;
    table << "r=" << r << " rhobar=" << rho << " zbar=" << z << '\n' << render_matrix(value);
    if (metric) {
      const ComponentTensor product = matrix_product(metric->evaluate(c), value);
      ComponentTensor id({Variance::covector, Variance::vector});
      for (int a = 0; a < 3; ++a) id.at({a, a}) = 1.0;
      const double deviation = ComponentTensor::max_abs_diff(product, id);
      samples[i]["g_ginv"] = product;
      samples[i]["g_ginv_identity_error"] = deviation;
      table << "  g g^-1 identity error " << std::scientific << std::setprecision(3) << deviation << std::defaultfloat
            << '\n';
    }
  }
  Json report{{"model", model.name()},
              {"task", o.task},
              {"angles", angles},
              {"field", std::move(j)}};
  emit(out, config, report, table.str());
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tangent-bundle spherical harmonics, harmonic d-tensors and Finsler metrics"};
  app.name("dharm");
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--config", g.config_path, "JSON run configuration")->check(CLI::ExistingFile);
  app.add_option("--seed", g.seed, "Seed of the sampled checks");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--quad-theta", g.quad_theta, "Gauss-Legendre order in cos(theta)");
  app.add_option("--quad-phi", g.quad_phi, "Uniform points in phi");
  app.add_option("--quad-beta", g.quad_beta, "Uniform points in beta");
  app.add_option("--fd-step", g.fd_step, "Step of first-order finite differences");
  app.add_option("--tol-prune", g.tol_prune, "Coefficient pruning tolerance");
  app.add_option("--tol-verify", g.tol_verify, "Relative tolerance of the Gram-matrix checks");

  EvalOptions eval;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a scalar harmonic or a harmonic d-tensor at a point");
  eval_cmd->add_option("kind", eval.kind, "scalar or dtensor")->required()->check(CLI::IsMember({"scalar", "dtensor"}));
  eval_cmd->add_option("items", eval.positional, "key=value pairs (l, m, n, theta, phi, beta) or a signature");
  eval_cmd->add_option("--l", eval.l);
  eval_cmd->add_option("--m", eval.m);
  eval_cmd->add_option("--n", eval.n);
  eval_cmd->add_option("--sig", eval.signature, "Signature \"l0|l1,..,lk;m,n;v,c,..\"");
  eval_cmd->add_option("--theta", eval.theta);
  eval_cmd->add_option("--phi", eval.phi);
  eval_cmd->add_option("--beta", eval.beta);
  eval_cmd->add_option("--scale", eval.scale, "Real part of a scale factor (expression, e.g. -sqrt(3))");
  eval_cmd->add_option("--scale-imag", eval.scale_imag, "Imaginary part of the scale factor");

  std::string suite;
  unsigned threads = 0;
  auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
  verify_cmd->add_option("suite", suite, "coupling, scalar, dtensor, geometry, finsler or all")
      ->required()
      ->check(CLI::IsMember({"coupling", "scalar", "dtensor", "geometry", "finsler", "all"}));
  verify_cmd->add_option("--threads", threads, "Worker threads (0: one per core)");

  FinslerOptions fin;
  auto* finsler_cmd = app.add_subcommand("finsler", "Momenta, metric or inverse metric of a Lagrangian");
  finsler_cmd->add_option("--model", fin.model, "euclidean, anisotropic-quadratic, non-quadratic or an expression in "
                                                "rho, z and r")
      ->required();
  finsler_cmd->add_option("--task", fin.task)->required()->check(CLI::IsMember({"momenta", "metric", "inverse"}));
  finsler_cmd->add_option("--r", fin.r, "Comma-separated r values");
  finsler_cmd->add_option("--rho", fin.rho, "Comma-separated rhobar values");
  finsler_cmd->add_option("--z", fin.z, "Comma-separated zbar values");
  finsler_cmd->add_option("--theta", fin.theta);
  finsler_cmd->add_option("--phi", fin.phi);
  finsler_cmd->add_option("--beta", fin.beta);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const verify::RunConfig config = load_config(g);
    if (*eval_cmd) return cmd_eval(eval, config, out);
    if (*verify_cmd) return cmd_verify(suite, threads, config, out);
    return cmd_finsler(fin, config, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace dharm::cli
