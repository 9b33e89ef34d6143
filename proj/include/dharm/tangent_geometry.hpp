#pragma once

#include "dharm/dtensor.hpp"
#include "dharm/scalar_harmonics.hpp"

#include <array>
#include <complex>
#include <functional>
#include <optional>
#include <vector>

namespace dharm {

using Vec3 = std::array<double, 3>;
using Mat3 = std::array<Vec3, 3>;

/// Point of the tangent bundle in Cartesian induced coordinates.
struct CartesianPoint {
  Vec3 x{};
  Vec3 xdot{};
};

/// Co-rotated spherical coordinates (r, theta, phi; rbar, alpha, beta).
struct SphericalChart {
  double r = 1.0;
  double theta = 0.0;
  double phi = 0.0;
  double rbar = 1.0;
  double alpha = 0.0;
  double beta = 0.0;
};

/// Co-rotated cylindrical coordinates (r, theta, phi; rhobar, zbar, beta).
struct CylindricalChart {
  double r = 1.0;
  double theta = 0.0;
  double phi = 0.0;
  double rhobar = 0.0;
  double zbar = 0.0;
  double beta = 0.0;

  AnglePoint angles() const { return AnglePoint::make(theta, phi, beta); }
};

Mat3 rotation_z(double angle);
Mat3 rotation_y(double angle);
Mat3 operator*(const Mat3& a, const Mat3& b);
Vec3 operator*(const Mat3& a, const Vec3& v);
Mat3 transpose(const Mat3& a);

/// x = Rz(phi) Ry(theta) (0, 0, r), xdot = Rz(phi) Ry(theta) Rz(beta) Ry(alpha) (0, 0, rbar).
CartesianPoint spherical_to_cartesian(const SphericalChart& c);
/// x as above, xdot = Rz(phi) Ry(theta) (rhobar cos beta, rhobar sin beta, zbar).
CartesianPoint cylindrical_to_cartesian(const CylindricalChart& c);
CylindricalChart spherical_to_cylindrical(const SphericalChart& c);

/// Inverse of cylindrical_to_cartesian. Throws ChartSingularity at x = 0, on
/// the axis x1 = x2 = 0 and when the fiber vector is parallel to x
/// (rhobar = 0, beta undefined).
CylindricalChart cartesian_to_cylindrical(const CartesianPoint& p);
/// Inverse of spherical_to_cartesian; additionally rejects alpha in {0, pi}.
SphericalChart cartesian_to_spherical(const CartesianPoint& p);

/// Generator matrix of the rotation r_j (j = 1, 2, 3) acting on Cartesian
/// coordinates: dx/dt = G_j x.
Mat3 rotation_generator(int j);
/// exp(t G_j).
Mat3 rotation_matrix(int j, double t);

/// Flow of the complete lift of r_j: the same rotation applied to x and xdot.
CartesianPoint rotation_flow(int j, double t, const CartesianPoint& p);
/// Flow of the co-rotation field b_j: the co-rotated frame is turned about
/// its own axes while r, rhobar and zbar stay fixed.
CartesianPoint corotation_flow(int j, double t, const CartesianPoint& p);

using ScalarField = std::function<std::complex<double>(const CartesianPoint&)>;
using TensorField = std::function<ComponentTensor(const CartesianPoint&)>;

enum class FlowKind { rotation, corotation };

/// Central difference of f along the flow: (f(flow(h)) - f(flow(-h))) / 2h.
std::complex<double> lie_derivative_function(const ScalarField& f, int j, const CartesianPoint& p, double h = 1e-5,
                                             FlowKind kind = FlowKind::rotation);

/// Finite-rotation pullback of a tensor field: every slot is transformed by
/// R^T, R = rotation_matrix(j, t), and the field is read at the rotated point.
ComponentTensor rotation_pullback(const TensorField& a, int j, double t, const CartesianPoint& p);

/// Central difference of the pullback in t.
ComponentTensor lie_derivative_dtensor(const TensorField& a, int j, const CartesianPoint& p, double h = 1e-5);

/// Operator components: x, y, z (j = 1, 2, 3) and the ladders plus = x + i y,
/// minus = x - i y.
enum class OperatorComponent { x, y, z, plus, minus };

struct FdOptions {
  /// Step of first-order operators.
  double step = 1e-5;
  /// Step of the second differences in the Casimir operators.
  double second_step = 1e-3;
  /// Two-level Richardson extrapolation of the second differences.
  bool richardson = true;
};

/// R_c f = i * d/dt f(flow) (and the ladder combinations), by FD.
std::complex<double> rotation_operator(const ScalarField& f, OperatorComponent c, const CartesianPoint& p,
                                       const FdOptions& opt = {});
/// B_c f, the same with the co-rotation flows.
std::complex<double> corotation_operator(const ScalarField& f, OperatorComponent c, const CartesianPoint& p,
                                         const FdOptions& opt = {});
/// R^2 f = -sum_j d^2/dt^2 f(flow_j(t)) at t = 0.
std::complex<double> rotation_casimir(const ScalarField& f, const CartesianPoint& p, const FdOptions& opt = {});
std::complex<double> corotation_casimir(const ScalarField& f, const CartesianPoint& p, const FdOptions& opt = {});

ComponentTensor rotation_operator(const TensorField& a, OperatorComponent c, const CartesianPoint& p,
                                  const FdOptions& opt = {});
ComponentTensor rotation_casimir(const TensorField& a, const CartesianPoint& p, const FdOptions& opt = {});

/// Scalar harmonic as a function on the tangent bundle.
ScalarField harmonic_field(const AngularTriple& t);
/// Harmonic d-tensor (or combination) as a tensor field on the tangent bundle.
TensorField dtensor_field(const HarmonicSignature& sig);
TensorField dtensor_field(const HarmonicCombination& c);

/// Function f(r, rhobar, zbar) with its fiber partials.
class RadialFunction {
 public:
  using Fn = std::function<double(double r, double rhobar, double zbar)>;

  /// Partials by central differences with Richardson extrapolation; the step
  /// is `relative_step` times |(rhobar, zbar)| (or times 1 near the origin).
  explicit RadialFunction(Fn value, double relative_step = 1e-3);
  /// User-supplied partials, cross-checked against finite differences at a
  /// fixed set of sample points. Throws std::invalid_argument when they
  /// disagree by more than `tolerance` (relative).
  RadialFunction(Fn value, Fn d_rhobar, Fn d_zbar, double tolerance = 1e-6);

  double operator()(double r, double rhobar, double zbar) const { return value_(r, rhobar, zbar); }
  double d_rhobar(double r, double rhobar, double zbar) const;
  double d_zbar(double r, double rhobar, double zbar) const;
  bool analytic() const { return static_cast<bool>(d_rhobar_); }

 private:
  Fn value_;
  Fn d_rhobar_;
  Fn d_zbar_;
  double relative_step_ = 1e-3;
};

/// Central first derivative of g at x with step h, Richardson-extrapolated
/// from h and h/2.
double richardson_derivative(const std::function<double(double)>& g, double x, double h);

/// Sum of radial coefficient functions times combinations of harmonic
/// d-tensors: a field whose coefficients depend on (r, rhobar, zbar).
class RadialCombination {
 public:
  using Coefficient = std::function<double(double r, double rhobar, double zbar)>;

  struct Term {
    Coefficient coefficient;
    HarmonicCombination combination;
    /// Human-readable description of the coefficient (serialization only).
    std::string label;
  };

  RadialCombination() = default;
  explicit RadialCombination(std::vector<Variance> variances) : variances_(std::move(variances)) {}

  void add(Coefficient coefficient, HarmonicCombination combination, std::string label = {});

  const std::vector<Term>& terms() const { return terms_; }
  const std::vector<Variance>& variances() const { return variances_; }
  int rank() const { return static_cast<int>(variances_.size()); }

  /// Coefficients evaluated at (r, rhobar, zbar).
  HarmonicCombination bind(double r, double rhobar, double zbar, double prune_tol = kDefaultPruneTolerance) const;
  ComponentTensor evaluate(const CylindricalChart& c) const;
  ComponentTensor evaluate(const CartesianPoint& p) const;

 private:
  std::vector<Variance> variances_;
  std::vector<Term> terms_;
};

/// Vertical (fiber) differential of f * Y_sig: a rank k+1 field whose new
/// covector slot comes first. Coefficients containing n f / rhobar throw
/// ChartSingularity when evaluated at rhobar = 0 with n != 0.
RadialCombination vertical_differential(const RadialFunction& f, const HarmonicSignature& sig);

/// Fiber gradient by central differences in Cartesian xdot (Richardson from
/// steps h and h/2), as a rank k+1 tensor with the new covector slot first.
ComponentTensor fiber_gradient_fd(const TensorField& a, const CartesianPoint& p, double h = 1e-3);

}  // namespace dharm
