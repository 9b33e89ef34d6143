#include "dharm/scalar_harmonics.hpp"

#include "dharm/coupling.hpp"
#include "dharm/errors.hpp"

#include "../coupling/primes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

namespace dharm {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

int parity_sign(int e) { return (e % 2 == 0) ? 1 : -1; }

double int_power(double x, int e) {
  double out = 1.0;
  for (int i = 0; i < e; ++i) out *= x;
  return out;
}

// prod_{k=lo+1}^{hi} k as a double (1 when hi <= lo).
double falling_product(int lo, int hi) {
  double out = 1.0;
  for (int k = lo + 1; k <= hi; ++k) out *= k;
  return out;
}

double factorial_value(int n) { return falling_product(0, n); }

double wrap_angle(double a) {
  double w = std::fmod(a, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  if (w >= kTwoPi) w = 0.0;
  return w;
}

}  // namespace

AngularTriple::AngularTriple(int l_, int m_, int n_) : l(l_), m(m_), n(n_) {
  if (l < 0) throw InvalidLabel("angular triple: l must be nonnegative (got " + std::to_string(l) + ")");
  if (std::abs(m) > l || std::abs(n) > l) {
    std::ostringstream os;
    os << "angular triple (" << l << "," << m << "," << n << "): requires |m| <= l and |n| <= l";
    throw InvalidLabel(os.str());
  }
}

AnglePoint AnglePoint::make(double theta, double phi, double beta) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi))
    throw std::invalid_argument("AnglePoint: theta must lie in [0, pi]");
  return {theta, wrap_angle(phi), wrap_angle(beta)};
}

void HarmonicExpansion::add(const AngularTriple& t, std::complex<double> coefficient) { terms_[t] += coefficient; }

HarmonicExpansion& HarmonicExpansion::prune(double tol) {
  std::erase_if(terms_, [tol](const auto& kv) { return std::abs(kv.second) <= tol; });
  return *this;
}

std::complex<double> HarmonicExpansion::coefficient(const AngularTriple& t) const {
  const auto it = terms_.find(t);
  return it == terms_.end() ? std::complex<double>{} : it->second;
}

std::complex<double> HarmonicExpansion::evaluate(const AnglePoint& p) const {
  std::complex<double> out = 0.0;
  for (const auto& [t, c] : terms_) out += c * eval_harmonic(t, p);
  return out;
}

RadicalRational normalization(const AngularTriple& t) {
  const int mx = std::max(t.m, t.n);
  const int mn = std::min(t.m, t.n);
  detail::PrimeExponents radicand;
  radicand.add_integer(2 * t.l + 1);
  radicand.add_factorial(std::abs(t.m - t.n), -2);
  radicand.add_factorial(t.l - mn);
  radicand.add_factorial(t.l + mx);
  radicand.add_factorial(t.l - mx, -1);
  radicand.add_factorial(t.l + mn, -1);
  return RadicalRational(parity_sign(mx), radicand.value());
}

double normalization_value(const AngularTriple& t) {
  const int mx = std::max(t.m, t.n);
  const int mn = std::min(t.m, t.n);
  // (l-min)!/(l-max)! and (l+max)!/(l+min)! as short products.
  const double ratio = falling_product(t.l - mx, t.l - mn) * falling_product(t.l + mn, t.l + mx);
  return parity_sign(mx) * std::sqrt((2.0 * t.l + 1.0) * ratio) / factorial_value(std::abs(t.m - t.n));
}

double hypergeometric_terminating(int a, int b, int c, double s) {
  if (a > 0) throw std::invalid_argument("hypergeometric_terminating: first parameter must be <= 0");
  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; k < -a; ++k) {
    term *= static_cast<double>(a + k) * (b + k) / (static_cast<double>(c + k) * (k + 1)) * s;
    sum += term;
  }
  return sum;
}

double theta_profile(const AngularTriple& t, double theta) {
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  const int mx = std::max(t.m, t.n);
  const int mn = std::min(t.m, t.n);
  const int dmn = std::abs(t.m - t.n);
  if (t.m + t.n >= 0)
    return int_power(c, t.m + t.n) * int_power(s, dmn) * hypergeometric_terminating(mx - t.l, mx + t.l + 1, dmn + 1, s * s);
  // Euler's transformation keeps the cosine power nonnegative.
  return int_power(c, -(t.m + t.n)) * int_power(s, dmn) *
         hypergeometric_terminating(-t.l - mn, t.l + 1 - mn, dmn + 1, s * s);
}

std::complex<double> eval_harmonic(const AngularTriple& t, const AnglePoint& p) {
  return normalization_value(t) * std::polar(1.0, t.m * p.phi + t.n * p.beta) * theta_profile(t, p.theta);
}

std::complex<double> wigner_D(int l, int m, int n, const AnglePoint& p) {
  AngularTriple(l, m, n);  // validates
  const double c = std::cos(0.5 * p.theta);
  const double s = std::sin(0.5 * p.theta);
  double sum = 0.0;
  for (int k = std::max(0, n - m); k <= std::min(l + n, l - m); ++k) {
    sum += parity_sign(k) /
           (factorial_value(k) * factorial_value(l + n - k) * factorial_value(l - m - k) * factorial_value(m - n + k)) *
           int_power(c, 2 * l + n - m - 2 * k) * int_power(s, m - n + 2 * k);
  }
  const double pre =
      parity_sign(m - n) * std::sqrt(factorial_value(l + m) * factorial_value(l - m) * factorial_value(l + n) * factorial_value(l - n));
  return pre * std::polar(1.0, -m * p.phi - n * p.beta) * sum;
}

std::pair<int, AngularTriple> conjugate_triple(const AngularTriple& t) {
  return {parity_sign(t.m + t.n), AngularTriple(t.l, -t.m, -t.n)};
}

LadderStep ladder_R(const AngularTriple& t, Ladder direction) {
  const int step = direction == Ladder::raise ? 1 : -1;
  if (std::abs(t.m + step) > t.l) return {0.0, t};
  return {std::sqrt(static_cast<double>(t.l - step * t.m) * (t.l + step * t.m + 1)), AngularTriple(t.l, t.m + step, t.n)};
}

LadderStep ladder_B(const AngularTriple& t, Ladder direction) {
  const int step = direction == Ladder::raise ? 1 : -1;
  if (std::abs(t.n + step) > t.l) return {0.0, t};
  return {std::sqrt(static_cast<double>(t.l - step * t.n) * (t.l + step * t.n + 1)), AngularTriple(t.l, t.m, t.n + step)};
}

HarmonicExpansion product_expand(const AngularTriple& a, const AngularTriple& b, double prune_tol) {
  HarmonicExpansion out;
  const int m = a.m + b.m;
  const int n = a.n + b.n;
  const int lo = std::max({std::abs(a.l - b.l), std::abs(m), std::abs(n)});
  for (int l = lo; l <= a.l + b.l; ++l) {
    const double coeff = std::sqrt((2.0 * a.l + 1) * (2.0 * b.l + 1) / (2.0 * l + 1)) *
                         clebsch_gordan_value(a.l, a.m, b.l, b.m, l, m) * clebsch_gordan_value(a.l, a.n, b.l, b.n, l, n);
    if (coeff != 0.0) out.add(AngularTriple(l, m, n), coeff);
  }
  return out.prune(prune_tol);
}

QuadratureSpec minimal_quadrature(const AngularTriple& t1, const AngularTriple& t2) {
  return {std::max(2, (t1.l + t2.l + 2) / 2), std::max(2, std::abs(t1.m) + std::abs(t2.m) + 1),
          std::max(2, std::abs(t1.n) + std::abs(t2.n) + 1)};
}

std::complex<double> orthogonality_integral(const AngularTriple& t1, const AngularTriple& t2, const QuadratureSpec& quad) {
  quad.validate();
  const QuadratureSpec need = minimal_quadrature(t1, t2);
  if (quad.gauss_order < need.gauss_order || quad.phi_points < need.phi_points || quad.beta_points < need.beta_points) {
    std::ostringstream os;
    os << "orthogonality_integral: quadrature (gauss " << quad.gauss_order << ", phi " << quad.phi_points << ", beta "
       << quad.beta_points << ") is not exact for this pair; needs at least (gauss " << need.gauss_order << ", phi "
       << need.phi_points << ", beta " << need.beta_points << ")";
    throw QuadratureOrderError(os.str());
  }
  const AngularGrid grid(quad);
  return integrate_pairing(grid, sample_harmonic(grid, t2), sample_harmonic(grid, t1));
}

GridField sample_harmonic(const AngularGrid& grid, const AngularTriple& t) {
  const auto thetas = grid.thetas();
  const auto phis = grid.phis();
  const auto betas = grid.betas();
  GridField field(1, grid.size());
  auto re = field.re(0);
  auto im = field.im(0);
  const double norm = normalization_value(t);
  std::vector<std::complex<double>> beta_phase(betas.size());
  for (std::size_t k = 0; k < betas.size(); ++k) beta_phase[k] = std::polar(1.0, t.n * betas[k]);
  std::size_t node = 0;
  for (double theta : thetas) {
    const double radial = norm * theta_profile(t, theta);
    for (double phi : phis) {
      const std::complex<double> a = radial * std::polar(1.0, t.m * phi);
      for (const auto& b : beta_phase) {
        const std::complex<double> v = a * b;
        re[node] = v.real();
        im[node] = v.imag();
        ++node;
      }
    }
  }
  return field;
}

}  // namespace dharm
