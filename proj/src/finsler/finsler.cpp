#include "dharm/errors.hpp"
#include "dharm/finsler.hpp"

#include <cmath>
#include <sstream>

namespace dharm {

namespace {

HarmonicSignature sig1(int n) { return HarmonicSignature(1, {0}, Variance::covector, 0, n); }
HarmonicSignature sig2(int l0, int n, Variance v) { return HarmonicSignature(l0, {1, 0}, v, 0, n); }

HarmonicCombination pair(const HarmonicSignature& a, const HarmonicSignature& b, double sign_b) {
  HarmonicCombination c(a.variances);
  c.add(a, 1.0);
  c.add(b, sign_b);
  return c;
}

void require_rhobar(double rhobar, const char* what) {
  if (!(rhobar > 0.0)) throw ChartSingularity(std::string(what) + ": L_rhobar / rhobar is singular at rhobar = 0");
}

}  // namespace

RadialCombination momenta(const LagrangianModel& model) {
  RadialCombination out({Variance::covector});
  out.add([model](double r, double rho, double z) { return -0.5 * model.partials(r, rho, z).L_z; },
          HarmonicCombination::single(sig1(0)), "-L_zbar/2");
  out.add([model](double r, double rho, double z) { return -model.partials(r, rho, z).L_rho / (2.0 * std::sqrt(2.0)); },
          pair(sig1(1), sig1(-1), -1.0), "-L_rhobar/(2 sqrt(2))");
  return out;
}

RadialCombination finsler_metric(const LagrangianModel& model) {
  const Variance c = Variance::covector;
  RadialCombination out({c, c});
  out.add(
      [model](double r, double rho, double z) {
        require_rhobar(rho, "finsler_metric");
        const auto p = model.partials(r, rho, z);
        return -(p.L_rho / rho + p.L_rhorho + p.L_zz) / (2.0 * std::sqrt(3.0));
      },
      HarmonicCombination::single(sig2(0, 0, c)), "-(L_rhobar/rhobar + L_rhobarrhobar + L_zbarzbar)/(2 sqrt(3))");
  out.add(
      [model](double r, double rho, double z) {
        require_rhobar(rho, "finsler_metric");
        const auto p = model.partials(r, rho, z);
        return -(p.L_rho / rho + p.L_rhorho - 2.0 * p.L_zz) / (2.0 * std::sqrt(6.0));
      },
      HarmonicCombination::single(sig2(2, 0, c)), "-(L_rhobar/rhobar + L_rhobarrhobar - 2 L_zbarzbar)/(2 sqrt(6))");
  out.add([model](double r, double rho, double z) { return 0.5 * model.partials(r, rho, z).L_rhoz; },
          pair(sig2(2, 1, c), sig2(2, -1, c), -1.0), "L_rhobarzbar/2");
  out.add(
      [model](double r, double rho, double z) {
        require_rhobar(rho, "finsler_metric");
        const auto p = model.partials(r, rho, z);
        return 0.25 * (p.L_rhorho - p.L_rho / rho);
      },
      pair(sig2(2, 2, c), sig2(2, -2, c), 1.0), "(L_rhobarrhobar - L_rhobar/rhobar)/4");
  return out;
}

RadialCombination inverse_metric(const LagrangianModel& model, InverseMetricOptions options) {
  // All four coefficients share the guarded denominators L_rho * D and D.
  struct Parts {
    LagrangianPartials p;
    double d = 0.0;
  };
  auto guarded = [model, options](double r, double rho, double z) {
    require_rhobar(rho, "inverse_metric");
    Parts out{model.partials(r, rho, z), 0.0};
    const auto& p = out.p;
    out.d = p.L_rhoz * p.L_rhoz - p.L_rhorho * p.L_zz;
    const double s = std::max({std::abs(p.L_rhorho), std::abs(p.L_rhoz), std::abs(p.L_zz), std::abs(p.L_rho / rho)});
    const double ratio = s > 0.0 ? std::abs(p.L_rho * out.d) / (rho * s * s * s) : 0.0;
    if (!(ratio >= options.degeneracy_threshold)) {
      std::ostringstream os;
      os << "inverse_metric: degenerate metric at (r, rhobar, zbar) = (" << r << ", " << rho << ", " << z
         << "); |L_rhobar (L_rhobarzbar^2 - L_rhobarrhobar L_zbarzbar)| ratio " << ratio << " below "
         << options.degeneracy_threshold;
      throw DegenerateMetric(os.str());
    }
    return out;
  };
  const Variance v = Variance::vector;
  RadialCombination out({v, v});
  out.add(
      [guarded](double r, double rho, double z) {
        const auto [p, d] = guarded(r, rho, z);
        return (2.0 / std::sqrt(3.0)) * (p.L_rho * (p.L_rhorho + p.L_zz) - rho * d) / (p.L_rho * d);
      },
      HarmonicCombination::single(sig2(0, 0, v)), "2 (L_rhobar (L_rhobarrhobar + L_zbarzbar) - rhobar D)/(sqrt(3) L_rhobar D)");
  out.add(
      [guarded](double r, double rho, double z) {
        const auto [p, d] = guarded(r, rho, z);
        return -std::sqrt(2.0 / 3.0) * (p.L_rho * (2.0 * p.L_rhorho - p.L_zz) + rho * d) / (p.L_rho * d);
      },
      HarmonicCombination::single(sig2(2, 0, v)),
      "-sqrt(2/3) (L_rhobar (2 L_rhobarrhobar - L_zbarzbar) + rhobar D)/(L_rhobar D)");
  out.add(
      [guarded](double r, double rho, double z) {
        const auto [p, d] = guarded(r, rho, z);
        return 2.0 * p.L_rhoz / d;
      },
      pair(sig2(2, 1, v), sig2(2, -1, v), -1.0), "2 L_rhobarzbar / D");
  out.add(
      [guarded](double r, double rho, double z) {
        const auto [p, d] = guarded(r, rho, z);
        return -(p.L_rho * p.L_zz + rho * d) / (p.L_rho * d);
      },
      pair(sig2(2, 2, v), sig2(2, -2, v), 1.0), "-(L_rhobar L_zbarzbar + rhobar D)/(L_rhobar D)");
  return out;
}

namespace {

double lagrangian_at(const LagrangianModel& model, const Vec3& x, const Vec3& xdot) {
  const CylindricalChart c = cartesian_to_cylindrical({x, xdot});
  return model(c.r, c.rhobar, c.zbar);
}

double fiber_step(const Vec3& xdot, double relative_step) {
  const double s = std::sqrt(xdot[0] * xdot[0] + xdot[1] * xdot[1] + xdot[2] * xdot[2]);
  if (!(relative_step > 0.0)) throw std::invalid_argument("finite-difference step must be positive");
  return relative_step * (s > 0.0 ? s : 1.0);
}

}  // namespace

ComponentTensor hessian_oracle(const LagrangianModel& model, const CartesianPoint& p, double relative_step) {
  const double h = fiber_step(p.xdot, relative_step);
  auto L = [&](int a, double sa, int b, double sb) {
    Vec3 v = p.xdot;
    v[a] += sa;
    v[b] += sb;
    return lagrangian_at(model, p.x, v);
  };
  const double l0 = lagrangian_at(model, p.x, p.xdot);
  auto second = [&](int a, int b, double s) {
    if (a == b) return (L(a, s, a, 0.0) - 2.0 * l0 + L(a, -s, a, 0.0)) / (s * s);
    return (L(a, s, b, s) - L(a, s, b, -s) - L(a, -s, b, s) + L(a, -s, b, -s)) / (4.0 * s * s);
  };
  ComponentTensor out({Variance::covector, Variance::covector});
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) out.at({a, b}) = 0.5 * (4.0 * second(a, b, 0.5 * h) - second(a, b, h)) / 3.0;
  return out;
}

ComponentTensor momenta_oracle(const LagrangianModel& model, const CartesianPoint& p, double relative_step) {
  const double h = fiber_step(p.xdot, relative_step);
  ComponentTensor out({Variance::covector});
  for (int a = 0; a < 3; ++a) {
    auto g = [&](double t) {
      Vec3 v = p.xdot;
      v[a] += t;
      return lagrangian_at(model, p.x, v);
    };
    out[a] = 0.5 * richardson_derivative([&](double x) { return g(x); }, 0.0, h);
  }
  return out;
}

ComponentTensor matrix_product(const ComponentTensor& a, const ComponentTensor& b) {
  if (a.rank() != 2 || b.rank() != 2) throw std::invalid_argument("matrix_product: both tensors must have rank 2");
  ComponentTensor out({a.variances()[0], b.variances()[1]});
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      std::complex<double> s = 0.0;
      for (int k = 0; k < 3; ++k) s += a.at({i, k}) * b.at({k, j});
      out.at({i, j}) = s;
    }
  return out;
}

}  // namespace dharm
