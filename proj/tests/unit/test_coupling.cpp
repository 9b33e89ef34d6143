#include "dharm/coupling.hpp"

#include <doctest.h>

#include <cmath>

using namespace dharm;

namespace {

RadicalRational rr(int sign, long num, long den) { return RadicalRational(sign, BigRational(num, den)); }

}  // namespace

TEST_CASE("radical rationals normalize and multiply exactly") {
  const RadicalRational a = rr(1, 2, 3);
  const RadicalRational b = rr(-1, 3, 8);
  CHECK(a * b == rr(-1, 1, 4));
  CHECK((a / a) == RadicalRational::integer(1));
  CHECK(RadicalRational::rational(BigRational(-3, 2)) == rr(-1, 9, 4));
  CHECK(rr(1, 8, 1).split().coefficient == 2);
  CHECK(rr(1, 8, 1).split().kernel == 2);
  CHECK(rr(-1, 1, 12).to_string() == "-sqrt(1/12)");
  CHECK_THROWS_AS(RadicalRational(2, BigRational(1)), std::invalid_argument);
  CHECK_THROWS_AS(RadicalRational(1, BigRational(-1)), std::invalid_argument);
  CHECK_THROWS_AS(a / RadicalRational{}, std::domain_error);
}

TEST_CASE("3j symbols match frozen exact values") {
  CHECK(three_j({1, 1, 0, 0, 0, 0}) == rr(-1, 1, 3));
  CHECK(three_j({2, 1, 1, 0, 1, -1}) == rr(1, 1, 30));
  CHECK(three_j({4, 6, 5, 2, -3, 1}) == rr(1, 2, 143));
  CHECK(three_j({3, 3, 3, 1, -2, 1}).is_zero());
  CHECK(three_j({6, 6, 12, 6, -6, 0}) == rr(1, 1, 67603900));
  CHECK(three_j({1, 1, 3, 0, 0, 0}).is_zero());  // triangle
  CHECK(three_j({1, 1, 1, 1, 0, 0}).is_zero());  // m sum
  CHECK(three_j({1, 1, 1, 0, 0, 0}).is_zero());  // odd J with zero m
  CHECK_THROWS_AS(three_j({-1, 1, 1, 0, 0, 0}), std::invalid_argument);
}

TEST_CASE("6j symbols match frozen exact values") {
  CHECK(six_j({1, 1, 1, 1, 1, 1}) == rr(1, 1, 36));
  CHECK(six_j({1, 1, 0, 1, 1, 0}) == rr(1, 1, 9));
  CHECK(six_j({3, 4, 5, 4, 3, 2}) == RadicalRational(-1, BigRational(53 * 53 * 33, 4620 * 4620)));
  CHECK(six_j({2, 2, 2, 2, 2, 2}) == RadicalRational::rational(BigRational(-3, 70)));
  CHECK(six_j({4, 4, 4, 4, 4, 4}) == RadicalRational::rational(BigRational(-467, 18018)));
  CHECK(six_j({1, 1, 3, 1, 1, 1}).is_zero());
}

TEST_CASE("Clebsch-Gordan coefficients follow from 3j symbols") {
  CHECK(clebsch_gordan(1, 0, 1, 0, 0, 0) == rr(-1, 1, 3));
  CHECK(clebsch_gordan(1, 0, 1, 0, 2, 0) == rr(1, 2, 3));
  CHECK(clebsch_gordan(2, 1, 1, 1, 3, 2) == rr(1, 2, 3));
  CHECK(clebsch_gordan(3, -1, 2, 1, 1, 0) == rr(-1, 8, 35));
}

TEST_CASE("double tables agree with the exact symbols") {
  CHECK(three_j_value(4, 6, 5, 2, -3, 1) == doctest::Approx(0.11826247919781652376).epsilon(1e-15));
  CHECK(three_j_value(6, 6, 12, 6, -6, 0) == doctest::Approx(0.00012162255556028076068).epsilon(1e-15));
  CHECK(six_j_value(3, 4, 5, 4, 3, 2) == doctest::Approx(-0.065900826897514181596).epsilon(1e-15));
  CHECK(clebsch_gordan_value(3, -1, 2, 1, 1, 0) == doctest::Approx(-0.47809144373375745599).epsilon(1e-15));
  // Outside the cached range the value is computed on demand.
  CHECK(three_j_value(20, 20, 0, 0, 0, 0) == doctest::Approx(1.0 / std::sqrt(41.0)).epsilon(1e-14));
}
