#include "dharm/oracles.hpp"

#include <cmath>
#include <memory>
#include <numbers>

namespace dharm::oracles {

std::mt19937_64 check_rng(std::uint64_t seed, std::string_view id) {
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
  for (const char c : id) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return std::mt19937_64(seed ^ h);
}

AnglePoint random_angles(std::mt19937_64& rng, double margin) {
  std::uniform_real_distribution<double> theta(margin, std::numbers::pi - margin);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  const double t = theta(rng);
  const double ph = angle(rng);
  const double b = angle(rng);
  return AnglePoint::make(t, ph, b);
}

CylindricalChart random_chart(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> r(0.5, 2.0);
  std::uniform_real_distribution<double> theta(0.2, std::numbers::pi - 0.2);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> rho(0.3, 2.0);
  std::uniform_real_distribution<double> z(-1.5, 1.5);
  CylindricalChart c;
  c.r = r(rng);
  c.theta = theta(rng);
  c.phi = angle(rng);
  c.rhobar = rho(rng);
  c.zbar = z(rng);
  c.beta = angle(rng);
  return c;
}

CartesianPoint point_at(const AnglePoint& p) {
  CylindricalChart c;
  c.r = 1.0;
  c.theta = p.theta;
  c.phi = p.phi;
  c.rhobar = 1.0;
  c.zbar = 0.5;
  c.beta = p.beta;
  return cylindrical_to_cartesian(c);
}

std::complex<double> spherical_harmonic(int l, int m, double theta, double phi) {
  const int am = std::abs(m);
  const double y = std::sph_legendre(static_cast<unsigned>(l), static_cast<unsigned>(am), theta);
  const std::complex<double> positive = y * std::polar(1.0, am * phi);
  if (m >= 0) return positive;
  return (am % 2 ? -1.0 : 1.0) * std::conj(positive);
}

void RadicalSum::add(const BigRational& coefficient, const BigInt& kernel) {
  if (coefficient == 0) return;
  terms_[kernel] += coefficient;
}

void RadicalSum::add(const RadicalRational& x) {
  if (x.is_zero()) return;
  const auto s = x.split();
  add(s.coefficient, s.kernel);
}

const std::map<BigInt, BigRational>& RadicalSum::terms() {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
  return terms_;
}

bool RadicalSum::equals(const RadicalRational& x) {
  const auto& t = terms();
  if (x.is_zero()) return t.empty();
  const auto s = x.split();
  return t.size() == 1 && t.begin()->first == s.kernel && t.begin()->second == s.coefficient;
}

const ExactThreeJTable::Entry& ExactThreeJTable::entry(int j1, int j2, int j3, int m1, int m2, int m3) {
  const std::array<int, 6> key{j1, j2, j3, m1, m2, m3};
  auto it = cache_.find(key);
  if (it == cache_.end()) {
    Entry e;
    e.value = three_j({j1, j2, j3, m1, m2, m3});
    e.split = e.value.is_zero() ? RadicalRational::Split{0, 1} : e.value.split();
    it = cache_.emplace(key, std::move(e)).first;
  }
  return it->second;
}

const RadicalRational& ExactThreeJTable::value(int j1, int j2, int j3, int m1, int m2, int m3) {
  return entry(j1, j2, j3, m1, m2, m3).value;
}

const RadicalRational::Split& ExactThreeJTable::split(int j1, int j2, int j3, int m1, int m2, int m3) {
  return entry(j1, j2, j3, m1, m2, m3).split;
}

RadicalRational::Split multiply(const RadicalRational::Split& a, const RadicalRational::Split& b) {
  if (a.coefficient == 0 || b.coefficient == 0) return {0, 1};
  // Both kernels are square-free: k1 k2 = g^2 (k1/g)(k2/g) with coprime cofactors.
  const BigInt g = boost::multiprecision::gcd(a.kernel, b.kernel);
  return {a.coefficient * b.coefficient * BigRational(g), (a.kernel / g) * (b.kernel / g)};
}

RadicalSum six_j_by_contraction(const SixJArgs& a, ExactThreeJTable& table) {
  RadicalSum sum;
  for (int m1 = -a.j1; m1 <= a.j1; ++m1)
    for (int m2 = -a.j2; m2 <= a.j2; ++m2) {
      const int m3 = -m1 - m2;
      if (std::abs(m3) > a.j3) continue;
      for (int m5 = -a.j5; m5 <= a.j5; ++m5) {
        const int m6 = m5 - m1;
        const int m4 = m6 - m2;
        if (std::abs(m6) > a.j6 || std::abs(m4) > a.j4) continue;
        auto s = table.split(a.j1, a.j2, a.j3, -m1, -m2, -m3);
        if (s.coefficient == 0) continue;
        s = multiply(s, table.split(a.j1, a.j5, a.j6, m1, -m5, m6));
        s = multiply(s, table.split(a.j4, a.j2, a.j6, m4, m2, -m6));
        s = multiply(s, table.split(a.j4, a.j5, a.j3, -m4, m5, m3));
        if (s.coefficient == 0) continue;
        const int phase = a.j1 + a.j2 + a.j3 + a.j4 + a.j5 + a.j6 - (m1 + m2 + m3 + m4 + m5 + m6);
        sum.add(phase % 2 ? BigRational(-s.coefficient) : s.coefficient, s.kernel);
      }
    }
  return sum;
}

std::pair<double, double> theta_ode_residual(const AngularTriple& t, double theta, double h) {
  auto f = [&](double x) { return theta_profile(t, x); };
  const double f0 = f(theta);
  auto d1 = [&](double s) { return (f(theta + s) - f(theta - s)) / (2.0 * s); };
  auto d2 = [&](double s) { return (f(theta + s) - 2.0 * f0 + f(theta - s)) / (s * s); };
  const double first = (4.0 * d1(0.5 * h) - d1(h)) / 3.0;
  const double second = (4.0 * d2(0.5 * h) - d2(h)) / 3.0;
  const double s = std::sin(theta), c = std::cos(theta);
  const double m = t.m, n = t.n;
  const double potential = t.l * (t.l + 1.0) - (m * m + n * n - 2.0 * m * n * c) / (s * s);
  const double friction = c / s * first;
  const double residual = second + friction + potential * f0;
  return {std::abs(residual), std::abs(second) + std::abs(friction) + std::abs(potential * f0)};
}

CombinationEvaluator::CombinationEvaluator(const HarmonicCombination& c, double prune_tol) : variances_(c.variances()) {
  for (const auto& [sig, coeff] : c.terms()) terms_.emplace_back(coeff, build_explicit(sig, prune_tol));
}

ComponentTensor CombinationEvaluator::operator()(const AnglePoint& p) const {
  ComponentTensor out(variances_);
  for (const auto& [coeff, x] : terms_) out += coeff * evaluate(x, p);
  return out;
}

double scaled_diff(const ComponentTensor& a, const ComponentTensor& b) {
  return ComponentTensor::max_abs_diff(a, b) / std::max(1.0, b.max_abs());
}

TensorField radial_field(const RadialFunction& f, const HarmonicSignature& sig) {
  auto x = std::make_shared<const ExpandedDTensor>(build_explicit(sig));
  return [f, x](const CartesianPoint& p) {
    const CylindricalChart c = cartesian_to_cylindrical(p);
    return f(c.r, c.rhobar, c.zbar) * evaluate(*x, c.angles());
  };
}

ComponentTensor identity(Variance first, Variance second) {
  ComponentTensor out({first, second});
  for (int a = 0; a < 3; ++a) out.at({a, a}) = 1.0;
  return out;
}

}  // namespace dharm::oracles
