#pragma once

#include "dharm/radical_rational.hpp"

namespace dharm {

/// Arguments of a Wigner 3j symbol (j1 j2 j3; m1 m2 m3). Integer spins only.
struct ThreeJArgs {
  int j1, j2, j3;
  int m1, m2, m3;
};

/// Arguments of a Wigner 6j symbol {j1 j2 j3; j4 j5 j6}.
struct SixJArgs {
  int j1, j2, j3;
  int j4, j5, j6;
};

bool triangle(int a, int b, int c);

/// Exact 3j symbol from the Racah closed form, Condon-Shortley phases.
/// Selection-rule violations give exact zero; negative j throws
/// std::invalid_argument.
RadicalRational three_j(const ThreeJArgs& args);

/// Exact 6j symbol from the Racah closed form. Zero on any triad violation.
RadicalRational six_j(const SixJArgs& args);

/// <j1 m1; j2 m2 | j3 m3> = (-1)^(j1-j2+m3) sqrt(2 j3 + 1) (j1 j2 j3; m1 m2 -m3).
RadicalRational clebsch_gordan(int j1, int m1, int j2, int m2, int j3, int m3);

/// Double-precision values of the exact symbols. Results for small
/// arguments are memoized in a lock-free table; safe to call concurrently.
double three_j_value(int j1, int j2, int j3, int m1, int m2, int m3);
double six_j_value(int j1, int j2, int j3, int j4, int j5, int j6);
double clebsch_gordan_value(int j1, int m1, int j2, int m2, int j3, int m3);

}  // namespace dharm
