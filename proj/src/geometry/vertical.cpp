#include "dharm/dtensor_algebra.hpp"
#include "dharm/errors.hpp"
#include "dharm/tangent_geometry.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace dharm {

double richardson_derivative(const std::function<double(double)>& g, double x, double h) {
  auto central = [&](double s) { return (g(x + s) - g(x - s)) / (2.0 * s); };
  return (4.0 * central(0.5 * h) - central(h)) / 3.0;
}

namespace {

double fiber_scale(double rhobar, double zbar) {
  const double s = std::hypot(rhobar, zbar);
  return s > 0.0 ? s : 1.0;
}

}  // namespace

RadialFunction::RadialFunction(Fn value, double relative_step) : value_(std::move(value)), relative_step_(relative_step) {
  if (!(relative_step_ > 0.0)) throw std::invalid_argument("RadialFunction: step must be positive");
}

RadialFunction::RadialFunction(Fn value, Fn d_rhobar, Fn d_zbar, double tolerance)
    : value_(std::move(value)), d_rhobar_(std::move(d_rhobar)), d_zbar_(std::move(d_zbar)) {
  if (!d_rhobar_ || !d_zbar_) throw std::invalid_argument("RadialFunction: both partials must be supplied");
  const RadialFunction numeric(value_);
  static constexpr double kSamples[][3] = {{1.0, 0.7, 0.3}, {1.5, 1.2, -0.8}, {0.8, 0.4, 1.1}, {2.0, 2.3, 0.5}};
  for (const auto& s : kSamples) {
    const double pairs[2][2] = {{d_rhobar_(s[0], s[1], s[2]), numeric.d_rhobar(s[0], s[1], s[2])},
                                {d_zbar_(s[0], s[1], s[2]), numeric.d_zbar(s[0], s[1], s[2])}};
    for (const auto& [given, fd] : pairs) {
      if (std::abs(given - fd) > tolerance * std::max(1.0, std::abs(fd))) {
        std::ostringstream os;
        os << "RadialFunction: supplied partial " << given << " disagrees with finite difference " << fd
           << " at (r, rhobar, zbar) = (" << s[0] << ", " << s[1] << ", " << s[2] << ")";
        throw std::invalid_argument(os.str());
      }
    }
  }
}

double RadialFunction::d_rhobar(double r, double rhobar, double zbar) const {
  if (d_rhobar_) return d_rhobar_(r, rhobar, zbar);
  return richardson_derivative([&](double x) { return value_(r, x, zbar); }, rhobar,
                               relative_step_ * fiber_scale(rhobar, zbar));
}

double RadialFunction::d_zbar(double r, double rhobar, double zbar) const {
  if (d_zbar_) return d_zbar_(r, rhobar, zbar);
  return richardson_derivative([&](double x) { return value_(r, rhobar, x); }, zbar,
                               relative_step_ * fiber_scale(rhobar, zbar));
}

void RadialCombination::add(Coefficient coefficient, HarmonicCombination combination, std::string label) {
  if (terms_.empty() && variances_.empty()) variances_ = combination.variances();
  if (combination.variances() != variances_ && !combination.empty())
    throw VarianceMismatch("RadialCombination: term variances differ from the combination's");
  terms_.push_back({std::move(coefficient), std::move(combination), std::move(label)});
}

HarmonicCombination RadialCombination::bind(double r, double rhobar, double zbar, double prune_tol) const {
  HarmonicCombination out(variances_);
  for (const auto& t : terms_) {
    const double c = t.coefficient(r, rhobar, zbar);
    if (c != 0.0) out.add(t.combination, c);
  }
  return out.prune(prune_tol);
}

ComponentTensor RadialCombination::evaluate(const CylindricalChart& c) const {
  const AnglePoint angles = c.angles();
  ComponentTensor out(variances_);
  for (const auto& t : terms_) {
    const double coeff = t.coefficient(c.r, c.rhobar, c.zbar);
    if (coeff != 0.0) out += coeff * dharm::evaluate(t.combination, angles);
  }
  return out;
}

ComponentTensor RadialCombination::evaluate(const CartesianPoint& p) const { return evaluate(cartesian_to_cylindrical(p)); }

RadialCombination vertical_differential(const RadialFunction& f, const HarmonicSignature& sig) {
  sig.validate();
  const int n = sig.n;
  auto n_over_rho = [f, n](double r, double rhobar, double zbar) {
    if (n == 0) return 0.0;
    if (!(std::abs(rhobar) > 0.0))
      throw ChartSingularity("vertical_differential: n f / rhobar diverges at rhobar = 0 (n = " + std::to_string(n) + ")");
    return n * f(r, rhobar, zbar) / rhobar;
  };
  const double s = 1.0 / std::sqrt(2.0);
  auto factor = [&](int nu) {
    return tensor_product_closed(HarmonicSignature(1, {0}, Variance::covector, 0, nu), sig);
  };
  std::vector<Variance> vars{Variance::covector};
  vars.insert(vars.end(), sig.variances.begin(), sig.variances.end());
  RadialCombination out(vars);
  out.add([=](double r, double rho, double z) { return s * (n_over_rho(r, rho, z) - f.d_rhobar(r, rho, z)); }, factor(1),
          "(n f/rhobar - f_rhobar)/sqrt(2)");
  out.add([=](double r, double rho, double z) { return s * (n_over_rho(r, rho, z) + f.d_rhobar(r, rho, z)); }, factor(-1),
          "(n f/rhobar + f_rhobar)/sqrt(2)");
  out.add([f](double r, double rho, double z) { return -f.d_zbar(r, rho, z); }, factor(0), "-f_zbar");
  return out;
}

ComponentTensor fiber_gradient_fd(const TensorField& a, const CartesianPoint& p, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("fiber_gradient_fd: step must be positive");
  const ComponentTensor a0 = a(p);
  std::vector<Variance> vars{Variance::covector};
  vars.insert(vars.end(), a0.variances().begin(), a0.variances().end());
  ComponentTensor out(vars);
  auto central = [&](int dir, double s) {
    CartesianPoint plus = p, minus = p;
    plus.xdot[dir] += s;
    minus.xdot[dir] -= s;
    ComponentTensor d = a(plus) - a(minus);
    d *= 1.0 / (2.0 * s);
    return d;
  };
  for (int dir = 0; dir < 3; ++dir) {
    ComponentTensor d = 4.0 * central(dir, 0.5 * h);
    d -= central(dir, h);
    d *= 1.0 / 3.0;
    for (std::size_t i = 0; i < d.size(); ++i) out[dir * d.size() + i] = d[i];
  }
  return out;
}

}  // namespace dharm
