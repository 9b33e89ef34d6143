#include "dharm/dtensor_algebra.hpp"
#include "dharm/oracles.hpp"
#include "dharm/tangent_geometry.hpp"
#include "suites.hpp"

#include <numbers>

namespace dharm::verify {

namespace {

using enum Variance;

struct NamedRadial {
  std::string name;
  RadialFunction f;
};

std::vector<NamedRadial> polynomials() {
  std::vector<NamedRadial> out;
  out.push_back({"rho^2 + 3 rho z - z^2",
                 RadialFunction([](double, double p, double z) { return p * p + 3 * p * z - z * z; },
                                [](double, double p, double z) { return 2 * p + 3 * z; },
                                [](double, double p, double z) { return 3 * p - 2 * z; })});
  out.push_back({"(1 + r) z^3 + rho^2 z",
                 RadialFunction([](double r, double p, double z) { return (1 + r) * z * z * z + p * p * z; })});
  out.push_back({"2 + rho - rho^3 / 4", RadialFunction([](double, double p, double) { return 2 + p - p * p * p / 4; })});
  return out;
}

std::string chart_name(const CylindricalChart& c) {
  std::ostringstream os;
  os << "(r=" << c.r << " theta=" << c.theta << " phi=" << c.phi << " rho=" << c.rhobar << " z=" << c.zbar
     << " beta=" << c.beta << ")";
  return os.str();
}

CheckResult vertical(const RunConfig& config) {
  auto rng = oracles::check_rng(config.seed, "geometry.c13");
  Worst w;
  std::vector<HarmonicSignature> sigs = enumerate_signatures(2, {});
  for (const auto v : {vector, covector}) {
    const auto rank1 = enumerate_signatures(2, {v});
    sigs.insert(sigs.end(), rank1.begin(), rank1.end());
  }
  for (const auto& [name, f] : polynomials())
    for (const auto& sig : sigs) {
      const RadialCombination dv = vertical_differential(f, sig);
      const TensorField field = oracles::radial_field(f, sig);
      for (int i = 0; i < 4; ++i) {
        const CylindricalChart c = oracles::random_chart(rng);
        const ComponentTensor fd = fiber_gradient_fd(field, cylindrical_to_cartesian(c));
        w.update(oracles::scaled_diff(dv.evaluate(c), fd), name + " " + sig.to_string() + " " + chart_name(c));
      }
    }
  return make_result("", 13, w, 1e-5,
                     "vertical differential vs Cartesian fiber finite differences, three polynomial radial "
                     "functions, k <= 1, l's <= 2, 4 random charts each");
}

double angle_gap(double a, double b) {
  const double d = std::remainder(a - b, 2.0 * std::numbers::pi);
  return std::abs(d);
}

CheckResult charts(const RunConfig& config) {
  auto rng = oracles::check_rng(config.seed, "geometry.charts");
  Worst w;
  for (int i = 0; i < 200; ++i) {
    const CylindricalChart c = oracles::random_chart(rng);
    const CylindricalChart back = cartesian_to_cylindrical(cylindrical_to_cartesian(c));
    const double e = std::max({std::abs(back.r - c.r), std::abs(back.theta - c.theta), angle_gap(back.phi, c.phi),
                               std::abs(back.rhobar - c.rhobar), std::abs(back.zbar - c.zbar),
                               angle_gap(back.beta, c.beta)});
    w.update(e, chart_name(c));
    SphericalChart s;
    s.r = c.r;
    s.theta = c.theta;
    s.phi = c.phi;
    s.rbar = std::hypot(c.rhobar, c.zbar);
    s.alpha = std::atan2(c.rhobar, c.zbar);
    s.beta = c.beta;
    const CartesianPoint a = spherical_to_cartesian(s);
    const CartesianPoint b = cylindrical_to_cartesian(c);
    for (int k = 0; k < 3; ++k) w.update(std::abs(a.x[k] - b.x[k]) + std::abs(a.xdot[k] - b.xdot[k]), "spherical");
  }
  return make_result("", 0, w, 1e-12, "cylindrical round trip and spherical/cylindrical agreement, 200 random charts");
}

CheckResult generator_sign(const RunConfig&) {
  Worst w;
  const CartesianPoint p{{1.0, 0.0, 0.0}, {0.0, 0.0, 1.0}};
  const CartesianPoint q = rotation_flow(3, std::numbers::pi / 2, p);
  w.update(std::abs(q.x[0]) + std::abs(q.x[1] + 1.0) + std::abs(q.x[2]), "r_3 at t = pi/2");
  return make_result("", 0, w, 1e-15, "flow of r_3 for t = pi/2 takes (1,0,0) to (0,-1,0)");
}

CheckResult basis_eigen(const RunConfig& config) {
  auto rng = oracles::check_rng(config.seed, "geometry.basis");
  FdOptions opt;
  opt.step = config.fd_step;
  Worst w;
  for (const auto v : {vector, covector})
    for (int mu = -1; mu <= 1; ++mu) {
      const ComponentTensor e = basis_tensor(mu, v);
      const TensorField f = [e](const CartesianPoint&) { return e; };
      const CartesianPoint p = oracles::point_at(oracles::random_angles(rng, 0.2));
      w.update(ComponentTensor::max_abs_diff(rotation_operator(f, OperatorComponent::z, p, opt), double(mu) * e),
               "e_" + std::to_string(mu));
    }
  return make_result("", 0, w, 1e-8, "R_z e_mu = mu e_mu for the constant basis fields");
}

}  // namespace

std::vector<Check> geometry_checks() {
  return {
      {"geometry.basis_eigen", 0, basis_eigen},
      {"geometry.c13.vertical_differential", 13, vertical},
      {"geometry.charts", 0, charts},
      {"geometry.generator_sign", 0, generator_sign},
  };
}

}  // namespace dharm::verify
