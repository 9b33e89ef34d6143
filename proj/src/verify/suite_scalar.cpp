#include "dharm/errors.hpp"
#include "dharm/oracles.hpp"
#include "dharm/scalar_harmonics.hpp"
#include "suites.hpp"

#include <numbers>

namespace dharm::verify {

namespace {

constexpr double kVolume = 8.0 * std::numbers::pi * std::numbers::pi;

std::vector<AngularTriple> triples(int max_l) {
  std::vector<AngularTriple> out;
  for (int l = 0; l <= max_l; ++l)
    for (int m = -l; m <= l; ++m)
      for (int n = -l; n <= l; ++n) out.emplace_back(l, m, n);
  return out;
}

std::string name(const AngularTriple& t) {
  return "(" + std::to_string(t.l) + "," + std::to_string(t.m) + "," + std::to_string(t.n) + ")";
}

std::string name(const AnglePoint& p) {
  std::ostringstream os;
  os << "theta=" << p.theta << " phi=" << p.phi << " beta=" << p.beta;
  return os.str();
}

CheckResult gram(const RunConfig& config) {
  const auto ts = triples(4);
  const QuadratureSpec need = minimal_quadrature(AngularTriple(4, 4, 4), AngularTriple(4, 4, 4));
  const QuadratureSpec& q = config.quadrature;
  if (q.gauss_order < need.gauss_order || q.phi_points < need.phi_points || q.beta_points < need.beta_points)
    throw QuadratureOrderError("scalar Gram matrix: quadrature below the exact order for l <= 4");
  const AngularGrid grid(q);
  const auto g = gram_matrix(
      grid, ts.size(), [&](std::size_t i) { return sample_harmonic(grid, ts[i]); }, 32);
  Worst w;
  double off = 0.0;
  for (std::size_t i = 0; i < ts.size(); ++i)
    for (std::size_t j = 0; j < ts.size(); ++j) {
      const double e = std::abs(g[i][j] - (i == j ? kVolume : 0.0)) / kVolume;
      if (i != j) off = std::max(off, e);
      w.update(e, name(ts[i]) + " x " + name(ts[j]));
    }
  std::ostringstream os;
  os << ts.size() << "x" << ts.size() << " Gram matrix / 8 pi^2 on Gauss-" << q.gauss_order << " x " << q.phi_points
     << " x " << q.beta_points << "; max off-diagonal " << off;
  return make_result("", 2, w, config.quadrature_tolerance.value_or(1e-9), os.str());
}

CheckResult wigner_d(const RunConfig& config) {
  auto rng = oracles::check_rng(config.seed, "scalar.c03");
  Worst w;
  const auto ts = triples(5);
  for (int i = 0; i < 200; ++i) {
    const AnglePoint p = oracles::random_angles(rng, 0.0);
    for (const auto& t : ts) {
      const std::complex<double> d =
          (t.m % 2 ? -1.0 : 1.0) * std::sqrt(2.0 * t.l + 1.0) * wigner_D(t.l, -t.m, -t.n, p);
      w.update(std::abs(eval_harmonic(t, p) - d), name(t) + " " + name(p));
    }
  }
  return make_result("", 3, w, 1e-12, "Y_lmn vs (-1)^m sqrt(2l+1) D^l_{-m,-n}, 200 random points, l <= 5");
}

CheckResult reduction(const RunConfig& config) {
  auto rng = oracles::check_rng(config.seed, "scalar.c04");
  Worst w;
  const double root = std::sqrt(4.0 * std::numbers::pi);
  std::vector<AnglePoint> points{AnglePoint::make(0.0, 0.3, 1.1), AnglePoint::make(std::numbers::pi, 2.0, 0.4)};
  for (int i = 0; i < 200; ++i) points.push_back(oracles::random_angles(rng, 0.0));
  for (const auto& p : points)
    for (int l = 0; l <= 5; ++l)
      for (int m = -l; m <= l; ++m) {
        const AngularTriple a(l, m, 0), b(l, 0, m);
        w.update(std::abs(eval_harmonic(a, p) - root * oracles::spherical_harmonic(l, m, p.theta, p.phi)),
                 name(a) + " " + name(p));
        w.update(std::abs(eval_harmonic(b, p) - root * oracles::spherical_harmonic(l, m, p.theta, p.beta)),
                 name(b) + " " + name(p));
      }
  return make_result("", 4, w, 1e-12,
                     "Y_lm0 = sqrt(4 pi) Y_lm(theta, phi) and Y_l0n = sqrt(4 pi) Y_ln(theta, beta) against "
                     "associated Legendre functions, l <= 5");
}

CheckResult eigen(const RunConfig& config) {
  auto rng = oracles::check_rng(config.seed, "scalar.c05");
  FdOptions opt;
  opt.step = config.fd_step;
  Worst w;
  for (const auto& t : triples(3)) {
    const ScalarField f = harmonic_field(t);
    for (int i = 0; i < 3; ++i) {
      const AnglePoint ang = oracles::random_angles(rng, 0.2);
      const CartesianPoint p = oracles::point_at(ang);
      const std::complex<double> y = eval_harmonic(t, ang);
      const std::string at = name(t) + " " + name(ang);
      const double casimir = t.l * (t.l + 1.0);
      w.update(std::abs(rotation_operator(f, OperatorComponent::z, p, opt) - double(t.m) * y), "R_z " + at);
      w.update(std::abs(corotation_operator(f, OperatorComponent::z, p, opt) - double(t.n) * y), "B_z " + at);
      w.update(std::abs(rotation_casimir(f, p, opt) - casimir * y), "R^2 " + at);
      w.update(std::abs(corotation_casimir(f, p, opt) - casimir * y), "B^2 " + at);
      for (const Ladder dir : {Ladder::raise, Ladder::lower}) {
        const auto oc = dir == Ladder::raise ? OperatorComponent::plus : OperatorComponent::minus;
        const LadderStep r = ladder_R(t, dir);
        const LadderStep b = ladder_B(t, dir);
        w.update(std::abs(rotation_operator(f, oc, p, opt) - r.coefficient * eval_harmonic(r.target, ang)),
                 "R_pm " + at);
        w.update(std::abs(corotation_operator(f, oc, p, opt) - b.coefficient * eval_harmonic(b.target, ang)),
                 "B_pm " + at);
      }
    }
  }
  return make_result("", 5, w, 1e-5,
                     "R_z, B_z, R^2, B^2 eigenvalues and R_pm, B_pm ladders by flow finite differences, l <= 3");
}

CheckResult theta_ode(const RunConfig&) {
  Worst w;
  constexpr int kSamples = 200;
  for (const auto& t : triples(4)) {
    std::vector<double> residuals(kSamples);
    double scale = 0.0;
    for (int i = 0; i < kSamples; ++i) {
      const double theta = 0.1 + (std::numbers::pi - 0.2) * i / (kSamples - 1);
      const auto [res, s] = oracles::theta_ode_residual(t, theta);
      residuals[i] = res;
      scale = std::max(scale, s);
    }
    // A constant profile (l = 0) has no terms at all.
    for (int i = 0; i < kSamples; ++i) w.update(scale > 0.0 ? residuals[i] / scale : residuals[i], name(t));
  }
  return make_result("", 6, w, 1e-6,
                     "theta equation residual relative to its largest term, 200 points in [0.1, pi - 0.1], l <= 4");
}

CheckResult product_rule(const RunConfig& config) {
  auto rng = oracles::check_rng(config.seed, "scalar.c07");
  std::vector<AnglePoint> points;
  for (int i = 0; i < 100; ++i) points.push_back(oracles::random_angles(rng, 0.0));
  // Harmonic values up to l = 6 at every point.
  std::map<AngularTriple, std::vector<std::complex<double>>> values;
  for (const auto& t : triples(6)) {
    auto& v = values[t];
    for (const auto& p : points) v.push_back(eval_harmonic(t, p));
  }
  Worst w;
  std::size_t range_violations = 0;
  const auto ts = triples(3);
  for (const auto& a : ts)
    for (const auto& b : ts) {
      const HarmonicExpansion x = product_expand(a, b, config.prune_tolerance);
      for (const auto& [t, c] : x.terms()) {
        const bool in_range = t.l >= std::abs(a.l - b.l) && t.l <= a.l + b.l && t.m == a.m + b.m && t.n == a.n + b.n;
        range_violations += !in_range;
      }
      const auto& va = values.at(a);
      const auto& vb = values.at(b);
      for (std::size_t i = 0; i < points.size(); ++i) {
        std::complex<double> expanded = 0.0;
        for (const auto& [t, c] : x.terms()) expanded += c * values.at(t)[i];
        w.update(std::abs(va[i] * vb[i] - expanded), name(a) + " x " + name(b));
      }
    }
  if (range_violations) w.error = std::max(w.error, 1.0);
  std::ostringstream os;
  os << "Y_t1 Y_t2 vs Clebsch-Gordan expansion, 100 random points, l, l' <= 3; " << range_violations
     << " emitted l'' outside |l - l'| <= l'' <= l + l'";
  return make_result("", 7, w, 1e-10, os.str());
}

CheckResult conjugation(const RunConfig& config) {
  auto rng = oracles::check_rng(config.seed, "scalar.conjugate");
  Worst w;
  for (const auto& t : triples(4)) {
    const auto [phase, tc] = conjugate_triple(t);
    for (int i = 0; i < 5; ++i) {
      const AnglePoint p = oracles::random_angles(rng, 0.0);
      w.update(std::abs(std::conj(eval_harmonic(t, p)) - double(phase) * eval_harmonic(tc, p)), name(t));
    }
  }
  return make_result("", 0, w, 1e-12, "conj(Y_lmn) = phase * Y_{l,-m,-n}, l <= 4");
}

CheckResult coarse_rule(const RunConfig&) {
  Worst w;
  try {
    orthogonality_integral(AngularTriple(3, 2, -1), AngularTriple(3, 2, -1), QuadratureSpec{2, 4, 4});
    w.update(1.0, "no QuadratureOrderError for Gauss-2 x 4 x 4 at l = 3");
  } catch (const QuadratureOrderError&) {
    w.update(0.0, "");
  }
  const double diag = std::abs(orthogonality_integral(AngularTriple(3, 2, -1), AngularTriple(3, 2, -1)) - kVolume);
  w.update(diag / kVolume, "(3,2,-1) norm");
  return make_result("", 0, w, 1e-9, "too-coarse rule rejected; minimal exact rule reproduces 8 pi^2");
}

}  // namespace

std::vector<Check> scalar_checks() {
  return {
      {"scalar.c02.gram_matrix", 2, gram},
      {"scalar.c03.wigner_d", 3, wigner_d},
      {"scalar.c04.spherical_reduction", 4, reduction},
      {"scalar.c05.eigen_ladder", 5, eigen},
      {"scalar.c06.theta_ode", 6, theta_ode},
      {"scalar.c07.product_rule", 7, product_rule},
      {"scalar.conjugation", 0, conjugation},
      {"scalar.quadrature_order", 0, coarse_rule},
  };
}

}  // namespace dharm::verify
