#include "dharm/radical_rational.hpp"

#include "primes.hpp"

#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace dharm {

namespace mp = boost::multiprecision;

RadicalRational::RadicalRational(int sign, BigRational radicand) : sign_(sign), radicand_(std::move(radicand)) {
  if (sign_ < -1 || sign_ > 1) throw std::invalid_argument("RadicalRational sign must be -1, 0 or 1");
  if (radicand_ < 0) throw std::invalid_argument("RadicalRational radicand must be nonnegative");
  if ((sign_ == 0) != (radicand_ == 0))
    throw std::invalid_argument("RadicalRational: sign is zero iff radicand is zero");
}

RadicalRational RadicalRational::integer(long value) { return rational(BigRational(value)); }

RadicalRational RadicalRational::rational(const BigRational& q) {
  if (q == 0) return {};
  return RadicalRational(q > 0 ? 1 : -1, q * q);
}

RadicalRational RadicalRational::sqrt_of(const BigRational& q) {
  if (q == 0) return {};
  return RadicalRational(1, q);
}

double ratio_to_double(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("ratio_to_double: zero denominator");
  if (num == 0) return 0.0;
  const bool negative = (num < 0) != (den < 0);
  const BigInt a = mp::abs(num);
  const BigInt b = mp::abs(den);
  // Scale so the integer quotient carries at least 64 significant bits.
  const long shift = 66 - (static_cast<long>(mp::msb(a)) - static_cast<long>(mp::msb(b)));
  const BigInt q = shift >= 0 ? BigInt((a << shift) / b) : BigInt(a / (BigInt(1) << -shift));
  const double out = std::ldexp(q.convert_to<double>(), static_cast<int>(-shift));
  return negative ? -out : out;
}

double RadicalRational::to_double() const {
  if (sign_ == 0) return 0.0;
  return sign_ * std::sqrt(ratio_to_double(numerator(), denominator()));
}

RadicalRational::Split RadicalRational::split() const {
  if (sign_ == 0) return {0, 1};
  // sqrt(a/b) = sqrt(a*b) / b; pull the square part out of a*b.
  const BigInt b = denominator();
  BigInt rest = numerator() * b;
  BigInt square_root_part = 1;
  BigInt kernel = 1;
  bool exhausted = true;
  for (const std::uint32_t p : detail::small_primes()) {
    if (BigInt(p) * p > rest) {
      exhausted = false;
      break;
    }
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (e / 2) square_root_part *= mp::pow(BigInt(p), static_cast<unsigned>(e / 2));
    if (e % 2) kernel *= p;
  }
  if (rest > 1 && !exhausted) {
    kernel *= rest;  // no factor up to sqrt(rest): prime
  } else if (rest > 1) {
    // Every remaining factor exceeds the sieve bound P. Below P^3 the rest is
    // a prime, a product of two primes, or a prime squared.
    const BigInt r = mp::sqrt(rest);
    const BigInt bound = BigInt(detail::small_primes().back());
    if (r * r == rest) {
      square_root_part *= r;
    } else if (rest < bound * bound * bound) {
      kernel *= rest;
    } else {
      throw std::domain_error("RadicalRational::split: radicand not factorable by trial division");
    }
  }
  BigRational coefficient(square_root_part, b);
  if (sign_ < 0) coefficient = -coefficient;
  return {coefficient, kernel};
}

RadicalRational RadicalRational::operator-() const {
  RadicalRational out = *this;
  out.sign_ = -sign_;
  return out;
}

RadicalRational operator*(const RadicalRational& a, const RadicalRational& b) {
  if (a.sign_ == 0 || b.sign_ == 0) return {};
  return RadicalRational(a.sign_ * b.sign_, a.radicand_ * b.radicand_);
}

RadicalRational operator/(const RadicalRational& a, const RadicalRational& b) {
  if (b.sign_ == 0) throw std::domain_error("RadicalRational: division by zero");
  if (a.sign_ == 0) return {};
  return RadicalRational(a.sign_ * b.sign_, a.radicand_ / b.radicand_);
}

std::string RadicalRational::to_string() const {
  if (sign_ == 0) return "0";
  std::ostringstream os;
  if (sign_ < 0) os << '-';
  const BigInt num = numerator();
  const BigInt den = denominator();
  const BigInt rn = mp::sqrt(num);
  const BigInt rd = mp::sqrt(den);
  if (rn * rn == num && rd * rd == den) {
    os << rn;
    if (rd != 1) os << '/' << rd;
  } else {
    os << "sqrt(" << num;
    if (den != 1) os << '/' << den;
    os << ')';
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const RadicalRational& value) { return os << value.to_string(); }

}  // namespace dharm
