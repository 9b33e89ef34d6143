#pragma once

#include "dharm/coupling.hpp"
#include "dharm/dtensor_algebra.hpp"
#include "dharm/tangent_geometry.hpp"

#include <complex>
#include <cstdint>
#include <map>
#include <random>
#include <string_view>
#include <utility>
#include <vector>

// Reference implementations used by the verification suites. Each one takes
// a route that shares no code with the library function it checks.
namespace dharm::oracles {

/// Generator seeded from the run seed and a check id, so every check draws the
/// same numbers regardless of scheduling.
std::mt19937_64 check_rng(std::uint64_t seed, std::string_view id);

/// Uniform angles with theta kept `margin` away from the poles.
AnglePoint random_angles(std::mt19937_64& rng, double margin = 0.05);
/// Cylindrical chart with r in [0.5, 2], theta in [0.2, pi - 0.2],
/// rhobar in [0.3, 2], zbar in [-1.5, 1.5].
CylindricalChart random_chart(std::mt19937_64& rng);
/// Cartesian image of a chart with unit r, rhobar and zbar = 0.5.
CartesianPoint point_at(const AnglePoint& p);

/// Ordinary spherical harmonic Y_lm(theta, phi) with Condon-Shortley phase,
/// from the standard library's associated Legendre functions.
std::complex<double> spherical_harmonic(int l, int m, double theta, double phi);

/// Exact sum of radicals, grouped by square-free kernel.
class RadicalSum {
 public:
  void add(const BigRational& coefficient, const BigInt& kernel);
  void add(const RadicalRational& x);
  /// Drops kernels whose coefficients cancelled.
  const std::map<BigInt, BigRational>& terms();
  bool equals(const RadicalRational& x);

 private:
  std::map<BigInt, BigRational> terms_;
};

/// Memoized exact 3j symbols with their square-free splits.
class ExactThreeJTable {
 public:
  const RadicalRational& value(int j1, int j2, int j3, int m1, int m2, int m3);
  const RadicalRational::Split& split(int j1, int j2, int j3, int m1, int m2, int m3);

 private:
  struct Entry {
    RadicalRational value;
    RadicalRational::Split split;
  };
  const Entry& entry(int j1, int j2, int j3, int m1, int m2, int m3);
  std::map<std::array<int, 6>, Entry> cache_;
};

/// Product of two square-free splits, again in split form.
RadicalRational::Split multiply(const RadicalRational::Split& a, const RadicalRational::Split& b);

/// 6j symbol as the sum over all magnetic indices of four 3j symbols, exact.
RadicalSum six_j_by_contraction(const SixJArgs& args, ExactThreeJTable& table);

/// Residual of the theta equation
///   Theta'' + cot(theta) Theta' + (l(l+1) - (m^2 + n^2 - 2 m n cos(theta)) / sin^2(theta)) Theta = 0
/// for the library's theta profile, with derivatives by Richardson-extrapolated
/// central differences. Returns {residual, scale}, scale being the sum of the
/// magnitudes of the individual terms.
std::pair<double, double> theta_ode_residual(const AngularTriple& t, double theta, double h = 1e-3);

/// Expansions of every term of a combination, built once and evaluated many times.
class CombinationEvaluator {
 public:
  explicit CombinationEvaluator(const HarmonicCombination& c, double prune_tol = kDefaultPruneTolerance);
  ComponentTensor operator()(const AnglePoint& p) const;

 private:
  std::vector<Variance> variances_;
  std::vector<std::pair<std::complex<double>, ExpandedDTensor>> terms_;
};

/// Largest |A - B| over components, divided by max(1, |B|_max).
double scaled_diff(const ComponentTensor& a, const ComponentTensor& b);

/// Field f(r, rhobar, zbar) * Y_sig in Cartesian coordinates.
TensorField radial_field(const RadialFunction& f, const HarmonicSignature& sig);

/// Identity matrix with the given slot variances.
ComponentTensor identity(Variance first, Variance second);

}  // namespace dharm::oracles
