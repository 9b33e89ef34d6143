#pragma once

#include "dharm/quadrature.hpp"
#include "dharm/radical_rational.hpp"

#include <compare>
#include <complex>
#include <map>
#include <utility>

namespace dharm {

inline constexpr double kDefaultPruneTolerance = 1e-13;

/// Label (l, m, n) of a tangent-bundle spherical harmonic, |m|, |n| <= l.
struct AngularTriple {
  int l = 0;
  int m = 0;
  int n = 0;

  AngularTriple() = default;
  /// Throws InvalidLabel unless l >= 0 and |m|, |n| <= l.
  AngularTriple(int l, int m, int n);

  friend auto operator<=>(const AngularTriple&, const AngularTriple&) = default;
};

/// Angular coordinates (theta, phi, beta) of a point of the slit tangent
/// bundle in co-rotated coordinates.
struct AnglePoint {
  double theta = 0.0;
  double phi = 0.0;
  double beta = 0.0;

  /// Checks theta in [0, pi] and wraps phi, beta into [0, 2 pi).
  static AnglePoint make(double theta, double phi, double beta);
};

/// Sparse sum of scalar harmonics with complex coefficients.
class HarmonicExpansion {
 public:
  using Terms = std::map<AngularTriple, std::complex<double>>;

  void add(const AngularTriple& t, std::complex<double> coefficient);
  /// Drops entries with |coefficient| <= tol.
  HarmonicExpansion& prune(double tol = kDefaultPruneTolerance);

  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::complex<double> coefficient(const AngularTriple& t) const;

  std::complex<double> evaluate(const AnglePoint& p) const;

 private:
  Terms terms_;
};

/// N_{l,m,n} = (-1)^max(m,n) sqrt(2l+1)/|m-n|! sqrt((l-min)!(l+max)!/((l-max)!(l+min)!)).
RadicalRational normalization(const AngularTriple& t);
/// The same constant in double precision, computed from short integer products.
double normalization_value(const AngularTriple& t);

/// Terminating 2F1(a, b; c; s) for a nonpositive integer a, summed in
/// ascending powers of s.
double hypergeometric_terminating(int a, int b, int c, double s);

/// Regular, unnormalized theta dependence of the harmonic (l, m, n).
double theta_profile(const AngularTriple& t, double theta);

std::complex<double> eval_harmonic(const AngularTriple& t, const AnglePoint& p);

/// Wigner D^l_{m,n}(phi, theta, beta) from its explicit finite sum. Kept as an
/// independent route to the harmonics: Y_{l,m,n} = (-1)^m sqrt(2l+1) D^l_{-m,-n}.
std::complex<double> wigner_D(int l, int m, int n, const AnglePoint& p);

/// conj(Y_{l,m,n}) = phase * Y_{l,-m,-n}.
std::pair<int, AngularTriple> conjugate_triple(const AngularTriple& t);

enum class Ladder { raise, lower };

struct LadderStep {
  double coefficient = 0.0;
  AngularTriple target;
};

/// R_{+/-} Y_{l,m,n} = coefficient * Y_{l,m+/-1,n}; coefficient 0 (target
/// unchanged) at the end of the ladder.
LadderStep ladder_R(const AngularTriple& t, Ladder direction);
/// B_{+/-} acts the same way on n.
LadderStep ladder_B(const AngularTriple& t, Ladder direction);

/// Clebsch-Gordan expansion of Y_{t1} * Y_{t2}.
HarmonicExpansion product_expand(const AngularTriple& t1, const AngularTriple& t2,
                                 double prune_tol = kDefaultPruneTolerance);

/// Smallest product rule that integrates Y_{t1} conj(Y_{t2}) sin(theta) exactly.
QuadratureSpec minimal_quadrature(const AngularTriple& t1, const AngularTriple& t2);

/// Integral of Y_{t1} conj(Y_{t2}) sin(theta) over theta, phi, beta. Throws
/// QuadratureOrderError (naming the orders used and needed) when the rule is
/// too coarse to be exact for this pair.
std::complex<double> orthogonality_integral(const AngularTriple& t1, const AngularTriple& t2,
                                            const QuadratureSpec& quad = {});

/// Y_t on every node of the grid (one component).
GridField sample_harmonic(const AngularGrid& grid, const AngularTriple& t);

}  // namespace dharm
