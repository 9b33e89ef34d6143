#include "dharm/dtensor_algebra.hpp"
#include "dharm/errors.hpp"
#include "dharm/finsler.hpp"
#include "dharm/oracles.hpp"
#include "suites.hpp"

namespace dharm::verify {

namespace {

using enum Variance;

std::vector<CylindricalChart> charts(const RunConfig& config, std::string_view id, int count = 50) {
  auto rng = oracles::check_rng(config.seed, id);
  std::vector<CylindricalChart> out;
  for (int i = 0; i < count; ++i) out.push_back(oracles::random_chart(rng));
  return out;
}

std::string chart_name(const CylindricalChart& c) {
  std::ostringstream os;
  os << "(r=" << c.r << " rho=" << c.rhobar << " z=" << c.zbar << ")";
  return os.str();
}

CheckResult euclidean(const RunConfig& config) {
  const LagrangianModel model = builtin_model("euclidean");
  const RadialCombination g = finsler_metric(model);
  const RadialCombination gi = inverse_metric(model);
  Worst w;
  for (const auto& c : charts(config, "finsler.c14.euclidean")) {
    w.update(ComponentTensor::max_abs_diff(g.evaluate(c), oracles::identity(covector, covector)), "metric " + chart_name(c));
    w.update(ComponentTensor::max_abs_diff(gi.evaluate(c), oracles::identity(vector, vector)), "inverse " + chart_name(c));
  }
  return make_result("", 14, w, 1e-12, "Euclidean L: metric and inverse metric equal the identity, 50 random points");
}

CheckResult metric_vs_hessian(const RunConfig& config) {
  Worst w;
  for (const char* name : {"anisotropic-quadratic", "non-quadratic"}) {
    const LagrangianModel model = builtin_model(name);
    const RadialCombination g = finsler_metric(model);
    for (const auto& c : charts(config, std::string("finsler.c14.hessian.") + name))
      w.update(oracles::scaled_diff(g.evaluate(c), hessian_oracle(model, cylindrical_to_cartesian(c))),
               std::string(name) + " " + chart_name(c));
  }
  return make_result("", 14, w, 1e-5,
                     "finsler_metric vs half the Cartesian fiber Hessian, rho^2 + 2 z^2 and "
                     "sqrt(rho^4 + 3 rho^2 z^2 + z^4)(1 + r/10), 50 random points each");
}

CheckResult metric_inverse(const RunConfig& config) {
  Worst w;
  for (const char* name : {"anisotropic-quadratic", "non-quadratic"}) {
    const LagrangianModel model = builtin_model(name);
    const RadialCombination g = finsler_metric(model);
    const RadialCombination gi = inverse_metric(model);
    for (const auto& c : charts(config, std::string("finsler.c14.inverse.") + name))
      w.update(ComponentTensor::max_abs_diff(matrix_product(g.evaluate(c), gi.evaluate(c)),
                                             oracles::identity(covector, vector)),
               std::string(name) + " " + chart_name(c));
  }
  return make_result("", 14, w, 1e-8, "g g^-1 = identity from evaluated components, both models, 50 random points");
}

CheckResult metric_inverse_algebraic(const RunConfig& config) {
  Worst w;
  for (const char* name : {"anisotropic-quadratic", "non-quadratic"}) {
    const LagrangianModel model = builtin_model(name);
    const RadialCombination g = finsler_metric(model);
    const RadialCombination gi = inverse_metric(model);
    for (const auto& c : charts(config, std::string("finsler.c14.algebraic.") + name, 10)) {
      const HarmonicCombination product = contract_adjacent(
          tensor_product_closed(g.bind(c.r, c.rhobar, c.zbar), gi.bind(c.r, c.rhobar, c.zbar), config.prune_tolerance), 1);
      w.update(ComponentTensor::max_abs_diff(evaluate(product, c.angles()), oracles::identity(covector, vector)),
               std::string(name) + " " + chart_name(c));
    }
  }
  return make_result("", 14, w, 1e-8,
                     "g (x) g^-1 with the middle slots contracted in the harmonic basis = identity, 10 random points");
}

CheckResult invariant_labels(const RunConfig&) {
  Worst w;
  std::size_t count = 0;
  for (const auto& name : builtin_model_names()) {
    const LagrangianModel model = builtin_model(name);
    for (const RadialCombination& rc : {momenta(model), finsler_metric(model), inverse_metric(model)})
      for (const auto& term : rc.terms())
        for (const auto& [sig, coeff] : term.combination.terms()) {
          ++count;
          if (sig.top_l() != 0) {
            w.error += 1.0;
            w.where = name + " " + sig.to_string();
          }
        }
  }
  w.cases = count;
  return make_result("", 14, w, 0.0, "every signature emitted by momenta, finsler_metric and inverse_metric has l_k = 0");
}

CheckResult momenta_check(const RunConfig& config) {
  Worst w;
  FdOptions opt;
  opt.step = config.fd_step;
  for (const auto& name : builtin_model_names()) {
    const LagrangianModel model = builtin_model(name);
    const RadialCombination p = momenta(model);
    for (const auto& c : charts(config, "finsler.momenta." + name, 20))
      w.update(oracles::scaled_diff(p.evaluate(c), momenta_oracle(model, cylindrical_to_cartesian(c))),
               name + " " + chart_name(c));
    const TensorField field = [p](const CartesianPoint& x) { return p.evaluate(x); };
    for (const auto& c : charts(config, "finsler.momenta.rotation." + name, 5))
      for (const auto oc : {OperatorComponent::x, OperatorComponent::y, OperatorComponent::z})
        w.update(rotation_operator(field, oc, cylindrical_to_cartesian(c), opt).max_abs(), "R_j p " + name);
  }
  return make_result("", 0, w, 1e-5, "momenta vs half the Cartesian fiber gradient, and R_j p = 0, built-in models");
}

CheckResult homogeneity(const RunConfig& config) {
  Worst w;
  const LagrangianModel model = builtin_model("non-quadratic");
  const RadialCombination g = finsler_metric(model);
  for (const auto& c : charts(config, "finsler.homogeneity", 20))
    for (const double lambda : {0.5, 2.0, 10.0}) {
      CylindricalChart s = c;
      s.rhobar *= lambda;
      s.zbar *= lambda;
      w.update(oracles::scaled_diff(g.evaluate(s), g.evaluate(c)), chart_name(c));
    }
  return make_result("", 0, w, 1e-6, "g(lambda xdot) = g(xdot) for lambda in {0.5, 2, 10}, non-quadratic model");
}

CheckResult rejections(const RunConfig&) {
  Worst w;
  std::size_t count = 0;
  auto expect = [&](auto&& fn, const std::string& what) {
    ++count;
    try {
      fn();
      w.error += 1.0;
      w.where = what;
    } catch (const std::exception&) {
    }
  };
  expect([] { model_from_spec("rho^3 + z^2"); }, "odd-degree expression accepted");
  for (const double eps : {0.0, 1e-13}) {
    // (rho + z)^2 + eps z^2 has L_rhoz^2 - L_rhorho L_zz = -4 eps.
    const LagrangianModel m(
        "near-degenerate", [eps](double, double p, double z) { return (p + z) * (p + z) + eps * z * z; },
        [eps](double, double p, double z) {
          return LagrangianPartials{(p + z) * (p + z) + eps * z * z, 2 * (p + z), 2 * (p + z) + 2 * eps * z, 2, 2,
                                    2 + 2 * eps};
        });
    expect([&] { inverse_metric(m).evaluate(CylindricalChart{1.0, 1.0, 0.5, 0.8, 0.3, 0.2}); },
           "degenerate metric not signaled");
  }
  expect([] { finsler_metric(builtin_model("euclidean")).evaluate(CylindricalChart{1.0, 1.0, 0.5, 0.0, 1.0, 0.0}); },
         "rhobar = 0 not signaled");
  w.cases = count;
  return make_result("", 0, w, 0.0, "odd-degree Lagrangian, degenerate metric and rhobar = 0 are rejected");
}

CheckResult expression_model(const RunConfig& config) {
  Worst w;
  const LagrangianModel fd = model_from_spec("rho^2 + 2*z^2");
  const RadialCombination a = finsler_metric(fd);
  const RadialCombination b = finsler_metric(builtin_model("anisotropic-quadratic"));
  for (const auto& c : charts(config, "finsler.expression", 20))
    w.update(ComponentTensor::max_abs_diff(a.evaluate(c), b.evaluate(c)), chart_name(c));
  return make_result("", 0, w, 1e-6, "expression model with finite-difference partials vs analytic built-in");
}

}  // namespace

std::vector<Check> finsler_checks() {
  return {
      {"finsler.c14.euclidean_identity", 14, euclidean},
      {"finsler.c14.inverse_algebraic", 14, metric_inverse_algebraic},
      {"finsler.c14.inverse_product", 14, metric_inverse},
      {"finsler.c14.invariant_labels", 14, invariant_labels},
      {"finsler.c14.metric_vs_hessian", 14, metric_vs_hessian},
      {"finsler.expression_model", 0, expression_model},
      {"finsler.homogeneity", 0, homogeneity},
      {"finsler.momenta", 0, momenta_check},
      {"finsler.rejections", 0, rejections},
  };
}

}  // namespace dharm::verify
