#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <string>

namespace dharm {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Exact number of the form sign * sqrt(p/q).
///
/// Closed under multiplication and division, which is all that products of
/// coupling coefficients need. Addition is deliberately absent: a sum of two
/// radicals is in general not a radical. Code that needs exact sums of
/// radicals goes through split() and groups by square-free kernel.
class RadicalRational {
 public:
  RadicalRational() = default;

  /// sign * sqrt(radicand). Throws std::invalid_argument when the sign is not
  /// in {-1, 0, 1}, the radicand is negative, or exactly one of them is zero.
  RadicalRational(int sign, BigRational radicand);

  static RadicalRational integer(long value);
  /// The exact value q (no square root), i.e. sign(q) * sqrt(q^2).
  static RadicalRational rational(const BigRational& q);
  /// sqrt(q) for q >= 0.
  static RadicalRational sqrt_of(const BigRational& q);

  int sign() const { return sign_; }
  const BigRational& radicand() const { return radicand_; }
  BigInt numerator() const { return boost::multiprecision::numerator(radicand_); }
  BigInt denominator() const { return boost::multiprecision::denominator(radicand_); }
  bool is_zero() const { return sign_ == 0; }

  /// value^2 as an exact rational.
  const BigRational& square() const { return radicand_; }

  double to_double() const;

  /// value = sign * coefficient * sqrt(kernel), kernel square-free.
  struct Split {
    BigRational coefficient;
    BigInt kernel;
  };
  /// Throws std::domain_error if the radicand has a prime factor too large
  /// for trial division to settle square-freeness.
  Split split() const;

  RadicalRational operator-() const;
  friend RadicalRational operator*(const RadicalRational& a, const RadicalRational& b);
  /// Throws std::domain_error on division by zero.
  friend RadicalRational operator/(const RadicalRational& a, const RadicalRational& b);
  RadicalRational& operator*=(const RadicalRational& other) { return *this = *this * other; }

  friend bool operator==(const RadicalRational& a, const RadicalRational& b) = default;

  /// "0", "-1", "sqrt(2/3)", "-sqrt(1/3)" ...
  std::string to_string() const;

 private:
  int sign_ = 0;
  BigRational radicand_ = 0;
};

std::ostream& operator<<(std::ostream& os, const RadicalRational& value);

/// Exact ratio of two big integers rounded to double without intermediate
/// overflow.
double ratio_to_double(const BigInt& num, const BigInt& den);

}  // namespace dharm
