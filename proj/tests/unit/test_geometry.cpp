#include "dharm/dtensor_algebra.hpp"
#include "dharm/errors.hpp"
#include "dharm/tangent_geometry.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace dharm;

namespace {

double dist(const Vec3& a, const Vec3& b) {
  return std::hypot(a[0] - b[0], a[1] - b[1], a[2] - b[2]);
}

CylindricalChart chart() {
  CylindricalChart c;
  c.r = 1.3;
  c.theta = 0.9;
  c.phi = 2.1;
  c.rhobar = 0.8;
  c.zbar = -0.4;
  c.beta = 5.0;
  return c;
}

}  // namespace

TEST_CASE("cylindrical chart round trip") {
  const CylindricalChart c = chart();
  const CylindricalChart back = cartesian_to_cylindrical(cylindrical_to_cartesian(c));
  CHECK(back.r == doctest::Approx(c.r).epsilon(1e-14));
  CHECK(back.theta == doctest::Approx(c.theta).epsilon(1e-14));
  CHECK(back.phi == doctest::Approx(c.phi).epsilon(1e-14));
  CHECK(back.rhobar == doctest::Approx(c.rhobar).epsilon(1e-14));
  CHECK(back.zbar == doctest::Approx(c.zbar).epsilon(1e-14));
  CHECK(back.beta == doctest::Approx(c.beta).epsilon(1e-14));
}

TEST_CASE("spherical and cylindrical charts agree") {
  SphericalChart s;
  s.r = 2.0;
  s.theta = 1.1;
  s.phi = 0.3;
  s.rbar = 1.5;
  s.alpha = 0.7;
  s.beta = 4.0;
  const CartesianPoint a = spherical_to_cartesian(s);
  const CartesianPoint b = cylindrical_to_cartesian(spherical_to_cylindrical(s));
  CHECK(dist(a.x, b.x) < 1e-14);
  CHECK(dist(a.xdot, b.xdot) < 1e-14);
  const CylindricalChart c = spherical_to_cylindrical(s);
  CHECK(c.rhobar == doctest::Approx(1.5 * std::sin(0.7)));
  CHECK(c.zbar == doctest::Approx(1.5 * std::cos(0.7)));
}

TEST_CASE("chart singularities") {
  CHECK_THROWS_AS(cartesian_to_cylindrical({{0, 0, 0}, {1, 0, 0}}), ChartSingularity);
  CHECK_THROWS_AS(cartesian_to_cylindrical({{0, 0, 2}, {1, 0, 0}}), ChartSingularity);
  CHECK_THROWS_AS(cartesian_to_cylindrical({{1, 1, 0}, {2, 2, 0}}), ChartSingularity);
  CHECK_THROWS_AS(cartesian_to_spherical({{1, 1, 0}, {-1, -1, 0}}), ChartSingularity);
  CHECK_NOTHROW(cartesian_to_cylindrical({{1, 1, 0}, {0, 0, 1}}));
}

TEST_CASE("rotation matrices exponentiate the generators") {
  for (int j = 1; j <= 3; ++j) {
    const double h = 1e-6;
    const Mat3 r = rotation_matrix(j, h);
    const Mat3 g = rotation_generator(j);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) CHECK(std::abs((r[a][b] - (a == b)) / h - g[a][b]) < 1e-5);
  }
  const Vec3 x = rotation_matrix(3, std::numbers::pi / 2) * Vec3{1, 0, 0};
  CHECK(dist(x, {0, -1, 0}) < 1e-15);
  CHECK_THROWS_AS(rotation_generator(4), std::invalid_argument);
}

TEST_CASE("rotation flow turns position and velocity together") {
  const CartesianPoint p = cylindrical_to_cartesian(chart());
  const CartesianPoint q = rotation_flow(2, 0.37, p);
  const Mat3 r = rotation_matrix(2, 0.37);
  CHECK(dist(q.x, r * p.x) < 1e-14);
  CHECK(dist(q.xdot, r * p.xdot) < 1e-14);
  // The co-rotation keeps r, rhobar and zbar.
  const CylindricalChart c = cartesian_to_cylindrical(corotation_flow(1, 0.2, p));
  CHECK(c.r == doctest::Approx(chart().r));
  CHECK(c.rhobar == doctest::Approx(chart().rhobar));
  CHECK(c.zbar == doctest::Approx(chart().zbar));
}

TEST_CASE("vertical differential of zbar^2") {
  const RadialFunction f([](double, double, double z) { return z * z; },
                         [](double, double, double) { return 0.0; }, [](double, double, double z) { return 2 * z; });
  const RadialCombination d = vertical_differential(f, HarmonicSignature(0, {}, std::vector<Variance>{}, 0, 0));
  CHECK(d.variances() == std::vector<Variance>{Variance::covector});
  const CylindricalChart c = chart();
  const CartesianPoint p = cylindrical_to_cartesian(c);
  const ComponentTensor t = d.evaluate(p);
  // zbar = xdot . x / r, so the fiber gradient is 2 zbar x / r.
  for (int a = 0; a < 3; ++a) CHECK(std::abs(t.at({a}) - 2 * c.zbar * p.x[a] / c.r) < 1e-12);
}

TEST_CASE("vertical differential against finite differences") {
  const RadialFunction f([](double r, double rho, double z) { return r * rho * rho * z; });
  const HarmonicSignature sig(1, {1}, Variance::vector, 1, -1);
  const CartesianPoint p = cylindrical_to_cartesian(chart());
  const ComponentTensor exact = vertical_differential(f, sig).evaluate(p);
  const auto field = [&](const CartesianPoint& q) {
    const CylindricalChart c = cartesian_to_cylindrical(q);
    return f(c.r, c.rhobar, c.zbar) * evaluate(sig, c.angles());
  };
  CHECK(ComponentTensor::max_abs_diff(exact, fiber_gradient_fd(field, p)) < 1e-8);
  CHECK(exact.variances() == std::vector<Variance>{Variance::covector, Variance::vector});
}

TEST_CASE("n f / rhobar terms are singular on the axis") {
  const RadialFunction f([](double, double rho, double z) { return rho * rho + z * z; });
  const RadialCombination d = vertical_differential(f, HarmonicSignature(1, {}, std::vector<Variance>{}, 0, 1));
  CylindricalChart c = chart();
  c.rhobar = 0.0;
  CHECK_THROWS_AS(d.evaluate(c), ChartSingularity);
}

TEST_CASE("analytic partials are cross-checked") {
  const auto value = [](double, double rho, double z) { return rho * z; };
  CHECK_NOTHROW(RadialFunction(value, [](double, double, double z) { return z; },
                               [](double, double rho, double) { return rho; }));
  CHECK_THROWS_AS(RadialFunction(value, [](double, double, double z) { return z; },
                                 [](double, double rho, double) { return 2 * rho; }),
                  std::invalid_argument);
}

TEST_CASE("Richardson derivative") {
  CHECK(richardson_derivative([](double x) { return std::sin(x); }, 0.4, 1e-2) ==
        doctest::Approx(std::cos(0.4)).epsilon(1e-10));
}
