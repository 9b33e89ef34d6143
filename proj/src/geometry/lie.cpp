#include "dharm/dtensor_algebra.hpp"
#include "dharm/tangent_geometry.hpp"

#include <stdexcept>

namespace dharm {

namespace {

using namespace std::complex_literals;

CartesianPoint flow(FlowKind kind, int j, double t, const CartesianPoint& p) {
  return kind == FlowKind::rotation ? rotation_flow(j, t, p) : corotation_flow(j, t, p);
}

void require_step(double h) {
  if (!(h > 0.0)) throw std::invalid_argument("finite-difference step must be positive");
}

std::complex<double> scalar_operator(const ScalarField& f, OperatorComponent c, const CartesianPoint& p,
                                     const FdOptions& opt, FlowKind kind) {
  auto op = [&](int j) { return 1i * lie_derivative_function(f, j, p, opt.step, kind); };
  switch (c) {
    case OperatorComponent::x:
      return op(1);
    case OperatorComponent::y:
      return op(2);
    case OperatorComponent::z:
      return op(3);
    case OperatorComponent::plus:
      return op(1) + 1i * op(2);
    case OperatorComponent::minus:
      return op(1) - 1i * op(2);
  }
  return 0.0;
}

std::complex<double> scalar_casimir(const ScalarField& f, const CartesianPoint& p, const FdOptions& opt, FlowKind kind) {
  require_step(opt.second_step);
  const std::complex<double> f0 = f(p);
  auto second = [&](double h) {
    std::complex<double> sum = 0.0;
    for (int j = 1; j <= 3; ++j) sum -= (f(flow(kind, j, h, p)) - 2.0 * f0 + f(flow(kind, j, -h, p))) / (h * h);
    return sum;
  };
  const double h = opt.second_step;
  if (!opt.richardson) return second(h);
  return (4.0 * second(0.5 * h) - second(h)) / 3.0;
}

// Applies R^T to every slot: out[a...] = sum_b R[b][a] in[b...].
ComponentTensor transform_slots(const ComponentTensor& t, const Mat3& r) {
  ComponentTensor cur = t;
  const int k = t.rank();
  std::size_t stride = 1;
  for (int s = k - 1; s >= 0; --s) {
    ComponentTensor next(t.variances());
    for (std::size_t flat = 0; flat < cur.size(); ++flat) {
      const int a = static_cast<int>((flat / stride) % 3);
      const std::size_t base = flat - static_cast<std::size_t>(a) * stride;
      std::complex<double> v = 0.0;
      for (int b = 0; b < 3; ++b) v += r[b][a] * cur[base + static_cast<std::size_t>(b) * stride];
      next[flat] = v;
    }
    cur = std::move(next);
    stride *= 3;
  }
  return cur;
}

}  // namespace

std::complex<double> lie_derivative_function(const ScalarField& f, int j, const CartesianPoint& p, double h,
                                             FlowKind kind) {
  require_step(h);
  return (f(flow(kind, j, h, p)) - f(flow(kind, j, -h, p))) / (2.0 * h);
}

ComponentTensor rotation_pullback(const TensorField& a, int j, double t, const CartesianPoint& p) {
  const Mat3 r = rotation_matrix(j, t);
  return transform_slots(a({r * p.x, r * p.xdot}), r);
}

ComponentTensor lie_derivative_dtensor(const TensorField& a, int j, const CartesianPoint& p, double h) {
  require_step(h);
  ComponentTensor d = rotation_pullback(a, j, h, p) - rotation_pullback(a, j, -h, p);
  d *= 1.0 / (2.0 * h);
  return d;
}

std::complex<double> rotation_operator(const ScalarField& f, OperatorComponent c, const CartesianPoint& p,
                                       const FdOptions& opt) {
  return scalar_operator(f, c, p, opt, FlowKind::rotation);
}

std::complex<double> corotation_operator(const ScalarField& f, OperatorComponent c, const CartesianPoint& p,
                                         const FdOptions& opt) {
  return scalar_operator(f, c, p, opt, FlowKind::corotation);
}

std::complex<double> rotation_casimir(const ScalarField& f, const CartesianPoint& p, const FdOptions& opt) {
  return scalar_casimir(f, p, opt, FlowKind::rotation);
}

std::complex<double> corotation_casimir(const ScalarField& f, const CartesianPoint& p, const FdOptions& opt) {
  return scalar_casimir(f, p, opt, FlowKind::corotation);
}

ComponentTensor rotation_operator(const TensorField& a, OperatorComponent c, const CartesianPoint& p,
                                  const FdOptions& opt) {
  auto op = [&](int j) {
    ComponentTensor t = lie_derivative_dtensor(a, j, p, opt.step);
    t *= 1i;
    return t;
  };
  switch (c) {
    case OperatorComponent::x:
      return op(1);
    case OperatorComponent::y:
      return op(2);
    case OperatorComponent::z:
      return op(3);
    case OperatorComponent::plus:
      return op(1) + 1i * op(2);
    case OperatorComponent::minus:
      return op(1) - 1i * op(2);
  }
  return {};
}

ComponentTensor rotation_casimir(const TensorField& a, const CartesianPoint& p, const FdOptions& opt) {
  require_step(opt.second_step);
  const ComponentTensor a0 = a(p);
  auto second = [&](double h) {
    ComponentTensor sum(a0.variances());
    for (int j = 1; j <= 3; ++j) {
      ComponentTensor d = rotation_pullback(a, j, h, p) + rotation_pullback(a, j, -h, p);
      d -= 2.0 * a0;
      sum -= d;
    }
    sum *= 1.0 / (h * h);
    return sum;
  };
  const double h = opt.second_step;
  if (!opt.richardson) return second(h);
  ComponentTensor out = 4.0 * second(0.5 * h);
  out -= second(h);
  out *= 1.0 / 3.0;
  return out;
}

ScalarField harmonic_field(const AngularTriple& t) {
  return [t](const CartesianPoint& p) { return eval_harmonic(t, cartesian_to_cylindrical(p).angles()); };
}

TensorField dtensor_field(const HarmonicSignature& sig) {
  return [x = build_explicit(sig)](const CartesianPoint& p) { return evaluate(x, cartesian_to_cylindrical(p).angles()); };
}

TensorField dtensor_field(const HarmonicCombination& c) {
  std::vector<std::pair<ExpandedDTensor, std::complex<double>>> parts;
  for (const auto& [sig, coeff] : c.terms()) parts.emplace_back(build_explicit(sig), coeff);
  return [parts = std::move(parts), vars = c.variances()](const CartesianPoint& p) {
    const AnglePoint a = cartesian_to_cylindrical(p).angles();
    ComponentTensor out(vars);
    for (const auto& [x, coeff] : parts) out += coeff * evaluate(x, a);
    return out;
  };
}

}  // namespace dharm
