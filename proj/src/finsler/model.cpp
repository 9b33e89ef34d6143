#include "dharm/errors.hpp"
#include "dharm/expression.hpp"
#include "dharm/finsler.hpp"

#include <array>
#include <cmath>
#include <sstream>

namespace dharm {

namespace {

constexpr std::array<std::array<double, 3>, 5> kHomogeneitySamples{
    {{1.0, 0.7, 0.3}, {1.5, 1.2, -0.8}, {0.8, 0.4, 1.1}, {2.0, 2.3, 0.5}, {1.2, 0.9, -1.7}}};

LagrangianPartials finite_difference_partials(const LagrangianModel::Fn& L, double r, double rho, double z,
                                              double relative_step) {
  const double scale = std::hypot(rho, z);
  const double h = relative_step * (scale > 0.0 ? scale : 1.0);
  auto f = [&](double a, double b) { return L(r, a, b); };
  const double f0 = f(rho, z);
  auto first_rho = [&](double s) { return (f(rho + s, z) - f(rho - s, z)) / (2.0 * s); };
  auto first_z = [&](double s) { return (f(rho, z + s) - f(rho, z - s)) / (2.0 * s); };
  auto second_rho = [&](double s) { return (f(rho + s, z) - 2.0 * f0 + f(rho - s, z)) / (s * s); };
  auto second_z = [&](double s) { return (f(rho, z + s) - 2.0 * f0 + f(rho, z - s)) / (s * s); };
  auto mixed = [&](double s) {
    return (f(rho + s, z + s) - f(rho + s, z - s) - f(rho - s, z + s) + f(rho - s, z - s)) / (4.0 * s * s);
  };
  auto richardson = [&](auto&& d) { return (4.0 * d(0.5 * h) - d(h)) / 3.0; };
  return {f0, richardson(first_rho), richardson(first_z), richardson(second_rho), richardson(mixed), richardson(second_z)};
}

}  // namespace

LagrangianModel::LagrangianModel(std::string name, Fn lagrangian, Options options)
    : name_(std::move(name)), lagrangian_(std::move(lagrangian)), options_(options) {
  check_homogeneity();
}

LagrangianModel::LagrangianModel(std::string name, Fn lagrangian, PartialsFn partials, Options options)
    : name_(std::move(name)), lagrangian_(std::move(lagrangian)), analytic_(std::move(partials)), options_(options) {
  check_homogeneity();
}

LagrangianPartials LagrangianModel::partials(double r, double rhobar, double zbar) const {
  if (analytic_) return analytic_(r, rhobar, zbar);
  return finite_difference_partials(lagrangian_, r, rhobar, zbar, options_.relative_step);
}

double LagrangianModel::homogeneity_defect(std::span<const std::array<double, 3>> samples) const {
  double worst = 0.0;
  for (const auto& [r, rho, z] : samples) {
    const LagrangianPartials p = partials(r, rho, z);
    const double euler = rho * p.L_rho + z * p.L_z;
    const double scale = std::max({std::abs(p.L), std::abs(rho * p.L_rho) + std::abs(z * p.L_z), 1e-300});
    worst = std::max(worst, std::abs(euler - 2.0 * p.L) / scale);
  }
  return worst;
}

void LagrangianModel::check_homogeneity() const {
  const double defect = homogeneity_defect(kHomogeneitySamples);
  if (!(defect <= options_.homogeneity_tolerance)) {
    std::ostringstream os;
    os << "Lagrangian \"" << name_ << "\" is not homogeneous of degree 2 in (rhobar, zbar): relative Euler defect "
       << defect << " exceeds " << options_.homogeneity_tolerance;
    throw HomogeneityError(os.str());
  }
}

std::vector<std::string> builtin_model_names() { return {"anisotropic-quadratic", "euclidean", "non-quadratic"}; }

LagrangianModel builtin_model(std::string_view name) {
  if (name == "euclidean") {
    return LagrangianModel(
        "euclidean", [](double, double rho, double z) { return rho * rho + z * z; },
        [](double, double rho, double z) { return LagrangianPartials{rho * rho + z * z, 2 * rho, 2 * z, 2, 0, 2}; });
  }
  if (name == "anisotropic-quadratic") {
    return LagrangianModel(
        "anisotropic-quadratic", [](double, double rho, double z) { return rho * rho + 2 * z * z; },
        [](double, double rho, double z) { return LagrangianPartials{rho * rho + 2 * z * z, 2 * rho, 4 * z, 2, 0, 4}; });
  }
  if (name == "non-quadratic") {
    auto value = [](double r, double rho, double z) {
      const double r2 = rho * rho, z2 = z * z;
      return std::sqrt(r2 * r2 + 3 * r2 * z2 + z2 * z2) * (1.0 + 0.1 * r);
    };
    auto partials = [](double r, double rho, double z) {
      const double r2 = rho * rho, z2 = z * z;
      const double q = r2 * r2 + 3 * r2 * z2 + z2 * z2;
      const double s = std::sqrt(q);
      const double q_r = 4 * rho * r2 + 6 * rho * z2;
      const double q_z = 6 * r2 * z + 4 * z * z2;
      const double q_rr = 12 * r2 + 6 * z2;
      const double q_rz = 12 * rho * z;
      const double q_zz = 6 * r2 + 12 * z2;
      const double k = 1.0 + 0.1 * r;
      auto d1 = [&](double qx) { return k * qx / (2 * s); };
      auto d2 = [&](double qxy, double qx, double qy) { return k * (qxy / (2 * s) - qx * qy / (4 * s * q)); };
      return LagrangianPartials{k * s, d1(q_r), d1(q_z), d2(q_rr, q_r, q_r), d2(q_rz, q_r, q_z), d2(q_zz, q_z, q_z)};
    };
    return LagrangianModel("non-quadratic", value, partials);
  }
  throw std::invalid_argument("unknown built-in model \"" + std::string(name) + "\"");
}

LagrangianModel model_from_spec(std::string_view spec) {
  for (const auto& name : builtin_model_names())
    if (spec == name) return builtin_model(name);
  const Expression e = Expression::parse(spec, {"r", "rho", "z"});
  return LagrangianModel(std::string(spec), [e](double r, double rho, double z) { return e({r, rho, z}); });
}

}  // namespace dharm
