#include "dharm/errors.hpp"
#include "dharm/expression.hpp"
#include "dharm/finsler.hpp"

#include <doctest.h>

#include <cmath>

using namespace dharm;

namespace {

CartesianPoint sample_point() {
  CylindricalChart c;
  c.r = 1.7;
  c.theta = 1.2;
  c.phi = 0.4;
  c.rhobar = 0.9;
  c.zbar = 0.6;
  c.beta = 2.5;
  return cylindrical_to_cartesian(c);
}

double max_diff(const ComponentTensor& t, const std::array<std::array<double, 3>, 3>& m) {
  double e = 0.0;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) e = std::max(e, std::abs(t.at({a, b}) - m[a][b]));
  return e;
}

}  // namespace

TEST_CASE("expressions") {
  const Expression e = Expression::parse("2^3^2 - -sqrt(rho) * (z + 1) / 2", {"rho", "z"});
  CHECK(e({4.0, 1.0}) == doctest::Approx(512.0 + 2.0));
  CHECK(Expression::parse("cos(pi) + exp(0) + log(1) + abs(-2)")({}) == doctest::Approx(2.0));
  CHECK_THROWS_AS(Expression::parse("rho +", {"rho"}), std::invalid_argument);
  CHECK_THROWS_AS(Expression::parse("foo(1)"), std::invalid_argument);
  CHECK_THROWS_AS(Expression::parse("w", {"rho"}), std::invalid_argument);
  CHECK_THROWS_AS(Expression::parse("(1"), std::invalid_argument);
  CHECK_THROWS_AS(Expression::parse("1 2"), std::invalid_argument);
}

TEST_CASE("Euclidean momenta equal the velocity") {
  const CartesianPoint p = sample_point();
  const ComponentTensor m = momenta(builtin_model("euclidean")).evaluate(p);
  CHECK(m.variances() == std::vector<Variance>{Variance::covector});
  for (int a = 0; a < 3; ++a) CHECK(std::abs(m.at({a}) - p.xdot[a]) < 1e-12);
}

TEST_CASE("anisotropic metric and its inverse") {
  const CartesianPoint p = sample_point();
  const double r = std::hypot(p.x[0], p.x[1], p.x[2]);
  // L = rho^2 + 2 z^2 gives g = 1 + u u^T and g^-1 = 1 - u u^T / 2, u = x / r.
  std::array<std::array<double, 3>, 3> g{}, gi{};
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      const double uu = p.x[a] * p.x[b] / (r * r);
      g[a][b] = (a == b) + uu;
      gi[a][b] = (a == b) - uu / 2;
    }
  const LagrangianModel model = builtin_model("anisotropic-quadratic");
  CHECK(max_diff(finsler_metric(model).evaluate(p), g) < 1e-10);
  CHECK(max_diff(inverse_metric(model).evaluate(p), gi) < 1e-10);
  CHECK(max_diff(hessian_oracle(model, p), g) < 1e-8);
}

TEST_CASE("non-quadratic metric times inverse is the identity") {
  const CartesianPoint p = sample_point();
  const LagrangianModel model = builtin_model("non-quadratic");
  const ComponentTensor prod =
      matrix_product(finsler_metric(model).evaluate(p), inverse_metric(model).evaluate(p));
  CHECK(max_diff(prod, {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}) < 1e-8);
  CHECK(ComponentTensor::max_abs_diff(momenta(model).evaluate(p), momenta_oracle(model, p)) < 1e-8);
}

TEST_CASE("expression models") {
  const LagrangianModel m = model_from_spec("rho^2 + 3*z^2");
  CHECK_FALSE(m.analytic());
  const LagrangianPartials d = m.partials(1.0, 0.5, 0.2);
  CHECK(d.L_rho == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(d.L_z == doctest::Approx(1.2).epsilon(1e-8));
  CHECK(d.L_zz == doctest::Approx(6.0).epsilon(1e-6));
  CHECK(model_from_spec("euclidean").name() == "euclidean");
}

TEST_CASE("model rejections") {
  CHECK_THROWS_AS(model_from_spec("rho^3"), HomogeneityError);
  CHECK_THROWS_AS(model_from_spec("rho + z"), HomogeneityError);
  CHECK_THROWS_AS(builtin_model("nope"), std::invalid_argument);
  CHECK_THROWS_AS(model_from_spec("rho^"), std::invalid_argument);

  // (rho + z)^2 has a rank-one fiber Hessian.
  const LagrangianModel degenerate(
      "degenerate", [](double, double rho, double z) { return (rho + z) * (rho + z); },
      [](double, double rho, double z) {
        LagrangianPartials d;
        d.L = (rho + z) * (rho + z);
        d.L_rho = d.L_z = 2 * (rho + z);
        d.L_rhorho = d.L_rhoz = d.L_zz = 2;
        return d;
      });
  CHECK_THROWS_AS(inverse_metric(degenerate).evaluate(sample_point()), DegenerateMetric);

  CylindricalChart axis;
  axis.r = 1.0;
  axis.theta = 1.0;
  axis.rhobar = 0.0;
  axis.zbar = 1.0;
  CHECK_THROWS_AS(finsler_metric(builtin_model("euclidean")).evaluate(axis), ChartSingularity);
}
