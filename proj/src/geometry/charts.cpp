#include "dharm/errors.hpp"
#include "dharm/tangent_geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dharm {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap(double a) {
  double w = std::fmod(a, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  return w >= kTwoPi ? 0.0 : w;
}

double norm(const Vec3& v) { return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]); }

// Relative size below which a coordinate is treated as lying on a singular locus.
constexpr double kSingularTolerance = 1e-14;

}  // namespace

Mat3 rotation_z(double a) {
  const double c = std::cos(a), s = std::sin(a);
  return {{{c, -s, 0.0}, {s, c, 0.0}, {0.0, 0.0, 1.0}}};
}

Mat3 rotation_y(double a) {
  const double c = std::cos(a), s = std::sin(a);
  return {{{c, 0.0, s}, {0.0, 1.0, 0.0}, {-s, 0.0, c}}};
}

Mat3 operator*(const Mat3& a, const Mat3& b) {
  Mat3 out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) out[i][j] += a[i][k] * b[k][j];
  return out;
}

Vec3 operator*(const Mat3& a, const Vec3& v) {
  Vec3 out{};
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) out[i] += a[i][k] * v[k];
  return out;
}

Mat3 transpose(const Mat3& a) {
  Mat3 out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[i][j] = a[j][i];
  return out;
}

CartesianPoint spherical_to_cartesian(const SphericalChart& c) {
  const Mat3 base = rotation_z(c.phi) * rotation_y(c.theta);
  return {base * Vec3{0.0, 0.0, c.r}, base * rotation_z(c.beta) * rotation_y(c.alpha) * Vec3{0.0, 0.0, c.rbar}};
}

CartesianPoint cylindrical_to_cartesian(const CylindricalChart& c) {
  const Mat3 base = rotation_z(c.phi) * rotation_y(c.theta);
  return {base * Vec3{0.0, 0.0, c.r},
          base * Vec3{c.rhobar * std::cos(c.beta), c.rhobar * std::sin(c.beta), c.zbar}};
}

CylindricalChart spherical_to_cylindrical(const SphericalChart& c) {
  return {c.r, c.theta, c.phi, c.rbar * std::sin(c.alpha), c.rbar * std::cos(c.alpha), c.beta};
}

CylindricalChart cartesian_to_cylindrical(const CartesianPoint& p) {
  const double r = norm(p.x);
  if (!(r > 0.0)) throw ChartSingularity("cartesian_to_cylindrical: base point at the origin");
  if (std::hypot(p.x[0], p.x[1]) <= kSingularTolerance * r)
    throw ChartSingularity("cartesian_to_cylindrical: base point on the axis x1 = x2 = 0 (theta = 0 or pi)");
  CylindricalChart c;
  c.r = r;
  c.theta = std::acos(std::clamp(p.x[2] / r, -1.0, 1.0));
  c.phi = wrap(std::atan2(p.x[1], p.x[0]));
  const Vec3 w = transpose(rotation_y(c.theta)) * (transpose(rotation_z(c.phi)) * p.xdot);
  c.rhobar = std::hypot(w[0], w[1]);
  c.zbar = w[2];
  if (c.rhobar <= kSingularTolerance * norm(p.xdot))
    throw ChartSingularity("cartesian_to_cylindrical: fiber vector parallel to the base point (rhobar = 0)");
  c.beta = wrap(std::atan2(w[1], w[0]));
  return c;
}

SphericalChart cartesian_to_spherical(const CartesianPoint& p) {
  const CylindricalChart c = cartesian_to_cylindrical(p);
  const double rbar = std::hypot(c.rhobar, c.zbar);
  return {c.r, c.theta, c.phi, rbar, std::atan2(c.rhobar, c.zbar), c.beta};
}

Mat3 rotation_generator(int j) {
  switch (j) {
    case 1:
      return {{{0, 0, 0}, {0, 0, 1}, {0, -1, 0}}};
    case 2:
      return {{{0, 0, -1}, {0, 0, 0}, {1, 0, 0}}};
    case 3:
      return {{{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}}};
    default:
      throw std::invalid_argument("rotation_generator: j must be 1, 2 or 3");
  }
}

Mat3 rotation_matrix(int j, double t) {
  const double c = std::cos(t), s = std::sin(t);
  switch (j) {
    case 1:
      return {{{1, 0, 0}, {0, c, s}, {0, -s, c}}};
    case 2:
      return {{{c, 0, -s}, {0, 1, 0}, {s, 0, c}}};
    case 3:
      return {{{c, s, 0}, {-s, c, 0}, {0, 0, 1}}};
    default:
      throw std::invalid_argument("rotation_matrix: j must be 1, 2 or 3");
  }
}

CartesianPoint rotation_flow(int j, double t, const CartesianPoint& p) {
  const Mat3 r = rotation_matrix(j, t);
  return {r * p.x, r * p.xdot};
}

CartesianPoint corotation_flow(int j, double t, const CartesianPoint& p) {
  // Frame columns: u1 along the part of xdot orthogonal to x, u3 along x.
  const double r = norm(p.x);
  if (!(r > 0.0)) throw ChartSingularity("corotation_flow: base point at the origin");
  Vec3 u3{p.x[0] / r, p.x[1] / r, p.x[2] / r};
  const double zbar = p.xdot[0] * u3[0] + p.xdot[1] * u3[1] + p.xdot[2] * u3[2];
  Vec3 w{p.xdot[0] - zbar * u3[0], p.xdot[1] - zbar * u3[1], p.xdot[2] - zbar * u3[2]};
  const double rhobar = norm(w);
  if (rhobar <= kSingularTolerance * norm(p.xdot))
    throw ChartSingularity("corotation_flow: fiber vector parallel to the base point (rhobar = 0)");
  const Vec3 u1{w[0] / rhobar, w[1] / rhobar, w[2] / rhobar};
  const Vec3 u2{u3[1] * u1[2] - u3[2] * u1[1], u3[2] * u1[0] - u3[0] * u1[2], u3[0] * u1[1] - u3[1] * u1[0]};
  Mat3 frame{};
  for (int i = 0; i < 3; ++i) frame[i] = {u1[i], u2[i], u3[i]};
  // b_1 turns the frame with exp(-t G_1), b_2 and b_3 with exp(t G_j).
  const Mat3 turned = frame * (j == 1 ? rotation_matrix(1, -t) : rotation_matrix(j, t));
  CartesianPoint out;
  for (int i = 0; i < 3; ++i) {
    out.x[i] = r * turned[i][2];
    out.xdot[i] = rhobar * turned[i][0] + zbar * turned[i][2];
  }
  return out;
}

}  // namespace dharm
