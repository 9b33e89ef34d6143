#include "dharm/errors.hpp"
#include "dharm/quadrature.hpp"
#include "dharm/scalar_harmonics.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace dharm;
using std::numbers::pi;

namespace {

void check_complex(std::complex<double> got, double re, double im, double tol = 1e-13) {
  CHECK(std::abs(got.real() - re) < tol);
  CHECK(std::abs(got.imag() - im) < tol);
}

}  // namespace

TEST_CASE("angular triples enforce their index conditions") {
  CHECK_NOTHROW(AngularTriple(2, -2, 1));
  CHECK_THROWS_AS(AngularTriple(1, 2, 0), InvalidLabel);
  CHECK_THROWS_AS(AngularTriple(1, 0, -2), InvalidLabel);
  CHECK_THROWS_AS(AngularTriple(-1, 0, 0), InvalidLabel);
}

TEST_CASE("normalization constants") {
  CHECK(normalization(AngularTriple(1, 0, 0)) == RadicalRational(1, BigRational(3)));
  CHECK(normalization(AngularTriple(1, 1, 1)) == RadicalRational(-1, BigRational(3)));
  CHECK(normalization_value(AngularTriple(4, -3, 2)) ==
        doctest::Approx(normalization(AngularTriple(4, -3, 2)).to_double()).epsilon(1e-15));
}

TEST_CASE("theta profile and terminating hypergeometric sum") {
  CHECK(hypergeometric_terminating(-1, 2, 1, 0.25) == doctest::Approx(0.5));
  CHECK(hypergeometric_terminating(0, 5, 3, 0.7) == 1.0);
  for (const double theta : {0.0, 0.4, 1.3, pi})
    CHECK(theta_profile(AngularTriple(1, 0, 0), theta) == doctest::Approx(std::cos(theta)).epsilon(1e-15));
  CHECK(theta_profile(AngularTriple(2, 1, -1), pi / 2) == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
  // m + n < 0 stays finite at theta = pi.
  CHECK(std::isfinite(theta_profile(AngularTriple(3, -2, -1), pi)));
}

TEST_CASE("harmonic values match high-precision Wigner-D sums") {
  check_complex(eval_harmonic(AngularTriple(0, 0, 0), AnglePoint::make(1.0, 2.0, 3.0)), 1.0, 0.0);
  check_complex(eval_harmonic(AngularTriple(1, 0, 0), AnglePoint::make(0.0, 0.0, 0.0)), std::sqrt(3.0), 0.0);
  const std::complex<double> y111 = eval_harmonic(AngularTriple(1, 1, 1), AnglePoint::make(0.0, 0.3, 0.5));
  check_complex(y111, -std::sqrt(3.0) * std::cos(0.8), -std::sqrt(3.0) * std::sin(0.8));
  check_complex(eval_harmonic(AngularTriple(2, 1, -1), AnglePoint::make(pi / 2, 0.3, 1.1)), -0.7789417812402250041,
                0.80202849166242557737);
  check_complex(eval_harmonic(AngularTriple(3, 2, -1), AnglePoint::make(0.7, 2.0, 0.25)), -0.42830594752738213007,
                -0.2983368722862984064);
  check_complex(eval_harmonic(AngularTriple(4, -3, 2), AnglePoint::make(2.5, 5.0, 3.0)), 1.4949271859253322555,
                0.67617897591930572567);
  check_complex(eval_harmonic(AngularTriple(5, 5, -5), AnglePoint::make(1.3, 0.1, 0.2)), -0.019181208530711767864,
                0.010478741978540793517);
  check_complex(eval_harmonic(AngularTriple(3, -1, 2), AnglePoint::make(pi, 0.6, 0.9)), 0.0, 0.0);
  check_complex(eval_harmonic(AngularTriple(3, -2, 2), AnglePoint::make(pi, 0.6, 0.9)), -2.1836327852155814162,
                -1.493903564267668008);
  check_complex(eval_harmonic(AngularTriple(4, 2, 2), AnglePoint::make(0.0, 1.0, 0.5)), -2.9699774898013363718,
                0.4233600241796016663);
}

TEST_CASE("Wigner D route") {
  const AnglePoint p = AnglePoint::make(0.9, 0.2, 2.2);
  CHECK(wigner_D(1, 0, 0, p).real() == doctest::Approx(std::cos(0.9)).epsilon(1e-15));
  const AngularTriple t(3, 1, -2);
  const std::complex<double> d = -std::sqrt(7.0) * wigner_D(3, -1, 2, p);
  CHECK(std::abs(eval_harmonic(t, p) - d) < 1e-13);
}

TEST_CASE("conjugation and ladders") {
  const auto [phase, t] = conjugate_triple(AngularTriple(1, 1, 0));
  CHECK(phase == -1);
  CHECK(t == AngularTriple(1, -1, 0));
  const LadderStep up = ladder_R(AngularTriple(1, 0, 0), Ladder::raise);
  CHECK(up.coefficient == doctest::Approx(std::sqrt(2.0)));
  CHECK(up.target == AngularTriple(1, 1, 0));
  const LadderStep down = ladder_B(AngularTriple(2, 0, 1), Ladder::lower);
  CHECK(down.coefficient == doctest::Approx(std::sqrt(6.0)));
  CHECK(down.target == AngularTriple(2, 0, 0));
  CHECK(ladder_R(AngularTriple(2, 2, 0), Ladder::raise).coefficient == 0.0);
}

TEST_CASE("product expansion") {
  const HarmonicExpansion x = product_expand(AngularTriple(1, 0, 0), AngularTriple(1, 0, 0));
  CHECK(x.size() == 2);
  CHECK(x.coefficient(AngularTriple(0, 0, 0)).real() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(x.coefficient(AngularTriple(2, 0, 0)).real() == doctest::Approx(2.0 / std::sqrt(5.0)).epsilon(1e-15));
  const AnglePoint p = AnglePoint::make(1.1, 0.3, 2.0);
  const AngularTriple a(3, 2, -1), b(2, -1, 2);
  const HarmonicExpansion y = product_expand(a, b);
  CHECK(std::abs(y.evaluate(p) - eval_harmonic(a, p) * eval_harmonic(b, p)) < 1e-12);
  for (const auto& [t, c] : y.terms()) {
    CHECK(t.l >= 1);
    CHECK(t.l <= 5);
    CHECK(t.m == 1);
    CHECK(t.n == 1);
  }
}

TEST_CASE("Gauss-Legendre rule") {
  const GaussLegendreRule r = gauss_legendre(5);
  CHECK(r.nodes.size() == 5);
  CHECK(r.nodes[2] == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(r.nodes[4] == doctest::Approx(0.9061798459386640).epsilon(1e-15));
  CHECK(r.weights[4] == doctest::Approx(0.2369268850561891).epsilon(1e-15));
  double x8 = 0.0;
  for (std::size_t i = 0; i < r.nodes.size(); ++i) x8 += r.weights[i] * std::pow(r.nodes[i], 8);
  CHECK(x8 == doctest::Approx(2.0 / 9.0).epsilon(1e-14));
  CHECK_THROWS_AS(QuadratureSpec({1, 4, 4}).validate(), std::invalid_argument);
}

TEST_CASE("orthogonality integrals") {
  const double v = 8 * pi * pi;
  CHECK(std::abs(orthogonality_integral(AngularTriple(0, 0, 0), AngularTriple(0, 0, 0)) - v) < 1e-9 * v);
  CHECK(std::abs(orthogonality_integral(AngularTriple(1, 0, 0), AngularTriple(2, 0, 0))) < 1e-9 * v);
  CHECK(std::abs(orthogonality_integral(AngularTriple(3, 2, -1), AngularTriple(3, 2, -1)) - v) < 1e-9 * v);
  CHECK_THROWS_AS(orthogonality_integral(AngularTriple(3, 2, -1), AngularTriple(3, 2, -1), {2, 3, 3}),
                  QuadratureOrderError);
}
