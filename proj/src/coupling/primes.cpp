#include "primes.hpp"

#include <deque>
#include <mutex>
#include <stdexcept>
#include <string>

namespace dharm::detail {

namespace {

constexpr std::uint32_t kSieveBound = 1u << 16;

std::vector<std::uint32_t> build_sieve() {
  std::vector<bool> composite(kSieveBound, false);
  std::vector<std::uint32_t> primes;
  for (std::uint32_t i = 2; i < kSieveBound; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = std::uint64_t{i} * i; j < kSieveBound; j += i) composite[j] = true;
  }
  return primes;
}

BigInt power_product(std::span<const std::uint32_t> primes, const std::vector<int>& exps, int sign) {
  BigInt out = 1;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    const int e = exps[i] * sign;
    if (e > 0) out *= boost::multiprecision::pow(BigInt(primes[i]), static_cast<unsigned>(e));
  }
  return out;
}

}  // namespace

std::span<const std::uint32_t> small_primes() {
  static const std::vector<std::uint32_t> primes = build_sieve();
  return primes;
}

void PrimeExponents::add_factorial(int n, int power) {
  if (n < 0) throw std::invalid_argument("factorial of negative number " + std::to_string(n));
  if (static_cast<std::uint32_t>(n) >= kSieveBound)
    throw std::out_of_range("factorial argument beyond prime sieve: " + std::to_string(n));
  const auto primes = small_primes();
  for (std::size_t i = 0; i < primes.size() && primes[i] <= static_cast<std::uint32_t>(n); ++i) {
    if (exponents_.size() <= i) exponents_.resize(i + 1, 0);
    // Legendre: exponent of p in n! is sum_k floor(n / p^k).
    int e = 0;
    for (std::uint64_t pk = primes[i]; pk <= static_cast<std::uint64_t>(n); pk *= primes[i])
      e += static_cast<int>(n / pk);
    exponents_[i] += power * e;
  }
}

void PrimeExponents::add_integer(std::uint64_t n, int power) {
  if (n == 0) throw std::invalid_argument("PrimeExponents cannot hold zero");
  const auto primes = small_primes();
  for (std::size_t i = 0; i < primes.size() && n > 1; ++i) {
    while (n % primes[i] == 0) {
      if (exponents_.size() <= i) exponents_.resize(i + 1, 0);
      exponents_[i] += power;
      n /= primes[i];
    }
  }
  if (n > 1) throw std::out_of_range("integer has a prime factor beyond the sieve");
}

BigInt PrimeExponents::numerator() const { return power_product(small_primes(), exponents_, 1); }
BigInt PrimeExponents::denominator() const { return power_product(small_primes(), exponents_, -1); }
BigRational PrimeExponents::value() const { return BigRational(numerator(), denominator()); }

const BigInt& factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of negative number " + std::to_string(n));
  constexpr int kTable = 256;
  static const std::vector<BigInt> table = [] {
    std::vector<BigInt> t(kTable);
    t[0] = 1;
    for (int i = 1; i < kTable; ++i) t[i] = t[i - 1] * i;
    return t;
  }();
  if (n < kTable) return table[n];
  // Large arguments are rare; keep them in a guarded side table.
  static std::mutex mutex;
  static std::deque<BigInt> extra;  // deque: references stay valid on growth
  std::lock_guard lock(mutex);
  if (extra.empty()) extra.push_back(table.back() * kTable);
  while (static_cast<int>(extra.size()) <= n - kTable)
    extra.push_back(extra.back() * (kTable + static_cast<int>(extra.size())));
  return extra[n - kTable];
}

}  // namespace dharm::detail
