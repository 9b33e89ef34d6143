#pragma once

#include "dharm/radical_rational.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace dharm::detail {

/// Primes below the sieve bound, built once on first use.
std::span<const std::uint32_t> small_primes();

/// Rational number held as a vector of prime exponents. Factorial ratios
/// reduce exactly here without ever forming the large factorials.
class PrimeExponents {
 public:
  /// Multiplies by n!^power. Throws std::out_of_range when n exceeds the sieve.
  void add_factorial(int n, int power = 1);
  /// Multiplies by n^power (n > 0, prime factors must lie inside the sieve).
  void add_integer(std::uint64_t n, int power = 1);

  BigInt numerator() const;
  BigInt denominator() const;
  BigRational value() const;

 private:
  std::vector<int> exponents_;
};

/// n! as a big integer; small values come from a table built once.
const BigInt& factorial(int n);

}  // namespace dharm::detail
