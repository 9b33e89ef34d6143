#include "dharm/coupling.hpp"

#include "primes.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>
#include <string>

namespace dharm {

namespace {

int parity_sign(long e) { return (e % 2 == 0) ? 1 : -1; }

void require_nonnegative(std::initializer_list<int> js, const char* what) {
  for (int j : js)
    if (j < 0) throw std::invalid_argument(std::string(what) + ": negative angular momentum " + std::to_string(j));
}

// sum_t terms / prefactor pieces are combined as S * sqrt(P); the result is
// sign(S) * sqrt(S^2 P).
RadicalRational combine(const BigRational& sum, const detail::PrimeExponents& radicand) {
  if (sum == 0) return {};
  return RadicalRational(sum > 0 ? 1 : -1, sum * sum * radicand.value());
}

void add_triangle(detail::PrimeExponents& p, int a, int b, int c) {
  p.add_factorial(a + b - c);
  p.add_factorial(a - b + c);
  p.add_factorial(-a + b + c);
  p.add_factorial(a + b + c + 1, -1);
}

// Lazily filled table of doubles for small arguments. Each slot is written at
// most with the same value, so relaxed racing writers are harmless.
class ValueTable {
 public:
  explicit ValueTable(std::size_t size) : size_(size), slots_(new std::atomic<double>[size]) {
    for (std::size_t i = 0; i < size_; ++i) slots_[i].store(std::numeric_limits<double>::quiet_NaN());
  }

  template <class Compute>
  double get(std::size_t index, Compute&& compute) {
    double v = slots_[index].load(std::memory_order_acquire);
    if (std::isnan(v)) {
      v = compute();
      slots_[index].store(v, std::memory_order_release);
    }
    return v;
  }

 private:
  std::size_t size_;
  std::unique_ptr<std::atomic<double>[]> slots_;
};

constexpr int kThreeJTableJ = 12;
constexpr int kSixJTableJ = 8;

}  // namespace

bool triangle(int a, int b, int c) { return a >= 0 && b >= 0 && c >= 0 && c >= std::abs(a - b) && c <= a + b; }

RadicalRational three_j(const ThreeJArgs& a) {
  require_nonnegative({a.j1, a.j2, a.j3}, "three_j");
  if (a.m1 + a.m2 + a.m3 != 0) return {};
  if (std::abs(a.m1) > a.j1 || std::abs(a.m2) > a.j2 || std::abs(a.m3) > a.j3) return {};
  if (!triangle(a.j1, a.j2, a.j3)) return {};

  detail::PrimeExponents radicand;
  add_triangle(radicand, a.j1, a.j2, a.j3);
  for (auto [j, m] : {std::pair{a.j1, a.m1}, std::pair{a.j2, a.m2}, std::pair{a.j3, a.m3}}) {
    radicand.add_factorial(j + m);
    radicand.add_factorial(j - m);
  }

  const int kmin = std::max({0, a.j2 - a.j3 - a.m1, a.j1 - a.j3 + a.m2});
  const int kmax = std::min({a.j1 + a.j2 - a.j3, a.j1 - a.m1, a.j2 + a.m2});
  BigRational sum = 0;
  for (int k = kmin; k <= kmax; ++k) {
    const BigInt den = detail::factorial(k) * detail::factorial(a.j3 - a.j2 + k + a.m1) *
                       detail::factorial(a.j3 - a.j1 + k - a.m2) * detail::factorial(a.j1 + a.j2 - a.j3 - k) *
                       detail::factorial(a.j1 - k - a.m1) * detail::factorial(a.j2 - k + a.m2);
    sum += BigRational(parity_sign(k), den);
  }
  sum *= parity_sign(a.j1 - a.j2 - a.m3);
  return combine(sum, radicand);
}

RadicalRational six_j(const SixJArgs& a) {
  require_nonnegative({a.j1, a.j2, a.j3, a.j4, a.j5, a.j6}, "six_j");
  if (!triangle(a.j1, a.j2, a.j3) || !triangle(a.j1, a.j5, a.j6) || !triangle(a.j4, a.j2, a.j6) ||
      !triangle(a.j4, a.j5, a.j3))
    return {};

  detail::PrimeExponents radicand;
  add_triangle(radicand, a.j1, a.j2, a.j3);
  add_triangle(radicand, a.j1, a.j5, a.j6);
  add_triangle(radicand, a.j4, a.j2, a.j6);
  add_triangle(radicand, a.j4, a.j5, a.j3);

  const int a1 = a.j1 + a.j2 + a.j3;
  const int a2 = a.j1 + a.j5 + a.j6;
  const int a3 = a.j4 + a.j2 + a.j6;
  const int a4 = a.j4 + a.j5 + a.j3;
  const int b1 = a.j1 + a.j2 + a.j4 + a.j5;
  const int b2 = a.j2 + a.j3 + a.j5 + a.j6;
  const int b3 = a.j3 + a.j1 + a.j6 + a.j4;
  BigRational sum = 0;
  for (int t = std::max({a1, a2, a3, a4}); t <= std::min({b1, b2, b3}); ++t) {
    const BigInt den = detail::factorial(t - a1) * detail::factorial(t - a2) * detail::factorial(t - a3) *
                       detail::factorial(t - a4) * detail::factorial(b1 - t) * detail::factorial(b2 - t) *
                       detail::factorial(b3 - t);
    sum += BigRational(parity_sign(t) * detail::factorial(t + 1), den);
  }
  return combine(sum, radicand);
}

RadicalRational clebsch_gordan(int j1, int m1, int j2, int m2, int j3, int m3) {
  const RadicalRational tj = three_j({j1, j2, j3, m1, m2, -m3});
  if (tj.is_zero()) return {};
  return RadicalRational::integer(parity_sign(j1 - j2 + m3)) * RadicalRational::sqrt_of(2 * j3 + 1) * tj;
}

double three_j_value(int j1, int j2, int j3, int m1, int m2, int m3) {
  if (m1 + m2 + m3 != 0) return 0.0;
  constexpr int J = kThreeJTableJ;
  if (j1 < 0 || j2 < 0 || j3 < 0 || j1 > J || j2 > J || j3 > J || std::abs(m1) > J || std::abs(m2) > J)
    return three_j({j1, j2, j3, m1, m2, m3}).to_double();
  constexpr std::size_t side = J + 1;
  constexpr std::size_t mside = 2 * J + 1;
  static ValueTable table(side * side * side * mside * mside);
  const std::size_t index = (((static_cast<std::size_t>(j1) * side + j2) * side + j3) * mside + (m1 + J)) * mside + (m2 + J);
  return table.get(index, [&] { return three_j({j1, j2, j3, m1, m2, m3}).to_double(); });
}

double six_j_value(int j1, int j2, int j3, int j4, int j5, int j6) {
  constexpr int J = kSixJTableJ;
  const int js[] = {j1, j2, j3, j4, j5, j6};
  if (std::any_of(std::begin(js), std::end(js), [](int j) { return j < 0 || j > J; }))
    return six_j({j1, j2, j3, j4, j5, j6}).to_double();
  static ValueTable table(531441);  // 9^6
  std::size_t index = 0;
  for (int j : js) index = index * (J + 1) + j;
  return table.get(index, [&] { return six_j({j1, j2, j3, j4, j5, j6}).to_double(); });
}

double clebsch_gordan_value(int j1, int m1, int j2, int m2, int j3, int m3) {
  const double tj = three_j_value(j1, j2, j3, m1, m2, -m3);
  if (tj == 0.0) return 0.0;
  return parity_sign(j1 - j2 + m3) * std::sqrt(2.0 * j3 + 1.0) * tj;
}

}  // namespace dharm
