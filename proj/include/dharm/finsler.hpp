#pragma once

#include "dharm/tangent_geometry.hpp"

#include <array>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dharm {

/// L and its fiber partials at one point (r, rhobar, zbar).
struct LagrangianPartials {
  double L = 0.0;
  double L_rho = 0.0;
  double L_z = 0.0;
  double L_rhorho = 0.0;
  double L_rhoz = 0.0;
  double L_zz = 0.0;
};

struct LagrangianOptions {
  /// Finite-difference step relative to |(rhobar, zbar)|.
  double relative_step = 1e-3;
  /// Allowed |rho L_rho + z L_z - 2 L| / max(|L|, scale) at the check points.
  double homogeneity_tolerance = 1e-6;
};

/// Spherically symmetric Lagrangian L(r, rhobar, zbar), homogeneous of
/// degree 2 in the fiber.
class LagrangianModel {
 public:
  using Fn = std::function<double(double r, double rhobar, double zbar)>;
  using PartialsFn = std::function<LagrangianPartials(double r, double rhobar, double zbar)>;
  using Options = LagrangianOptions;

  /// Partials by finite differences. Runs the homogeneity check and throws
  /// HomogeneityError when it fails.
  LagrangianModel(std::string name, Fn lagrangian, Options options = {});
  /// Analytic partials take precedence over finite differences.
  LagrangianModel(std::string name, Fn lagrangian, PartialsFn partials, Options options = {});

  const std::string& name() const { return name_; }
  double operator()(double r, double rhobar, double zbar) const { return lagrangian_(r, rhobar, zbar); }
  LagrangianPartials partials(double r, double rhobar, double zbar) const;
  bool analytic() const { return static_cast<bool>(analytic_); }

  /// Largest relative Euler-relation defect over the given (r, rhobar, zbar)
  /// samples.
  double homogeneity_defect(std::span<const std::array<double, 3>> samples) const;

 private:
  void check_homogeneity() const;

  std::string name_;
  Fn lagrangian_;
  PartialsFn analytic_;
  Options options_;
};

/// Names accepted by builtin_model.
std::vector<std::string> builtin_model_names();
/// "euclidean" (rho^2 + z^2), "anisotropic-quadratic" (rho^2 + 2 z^2) or
/// "non-quadratic" (sqrt(rho^4 + 3 rho^2 z^2 + z^4) (1 + r/10)). Throws
/// std::invalid_argument for other names.
LagrangianModel builtin_model(std::string_view name);
/// Built-in name, or an arithmetic expression in rho, z and r
/// (+ - * / ^, parentheses, sqrt, abs, exp, log).
LagrangianModel model_from_spec(std::string_view spec);

/// p_a = (1/2) L_{xdot^a} as a rank-1 covector field.
RadialCombination momenta(const LagrangianModel& model);
/// g_ab = (1/2) L_{xdot^a xdot^b} as a rank-2 covariant field. Coefficients
/// throw ChartSingularity at rhobar = 0.
RadialCombination finsler_metric(const LagrangianModel& model);

struct InverseMetricOptions {
  /// Minimum of |L_rho (L_rhoz^2 - L_rhorho L_zz)| / (rhobar s^3), s the
  /// largest of |L_rhorho|, |L_rhoz|, |L_zz|, |L_rho / rhobar|.
  double degeneracy_threshold = 1e-10;
};

/// g^ab as a rank-2 contravariant field. Coefficients throw DegenerateMetric
/// where the guarded denominator is too small.
RadialCombination inverse_metric(const LagrangianModel& model, InverseMetricOptions options = {});

/// (1/2) times the Cartesian fiber Hessian of L by central differences
/// (Richardson from steps h and h/2, h relative to |xdot|).
ComponentTensor hessian_oracle(const LagrangianModel& model, const CartesianPoint& p, double relative_step = 1e-3);
/// (1/2) times the Cartesian fiber gradient of L, same scheme.
ComponentTensor momenta_oracle(const LagrangianModel& model, const CartesianPoint& p, double relative_step = 1e-3);

/// 3x3 complex matrix product of two rank-2 component tensors (contracting
/// the inner slots).
ComponentTensor matrix_product(const ComponentTensor& a, const ComponentTensor& b);

}  // namespace dharm
