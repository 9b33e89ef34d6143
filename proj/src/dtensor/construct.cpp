#include "dharm/coupling.hpp"
#include "dharm/dtensor_algebra.hpp"
#include "dharm/errors.hpp"

#include <cmath>

namespace dharm {

namespace {

int parity_sign(int e) { return (e % 2 == 0) ? 1 : -1; }

// Factor contributed by one slot: (-1)^(l-m) sqrt(2l+1) (l l' 1; m -m' -mu).
double slot_factor(int l, int l_prev, int m, int m_prev, int mu) {
  return parity_sign(l - m) * std::sqrt(2.0 * l + 1.0) * three_j_value(l, l_prev, 1, m, -m_prev, -mu);
}

}  // namespace

std::vector<std::vector<int>> enumerate_chains(int l0, int k, int max_l) {
  std::vector<std::vector<int>> out;
  std::vector<int> chain;
  auto rec = [&](auto&& self, int prev) -> void {
    if (static_cast<int>(chain.size()) == k) {
      out.push_back(chain);
      return;
    }
    for (int l = std::abs(prev - 1); l <= prev + 1; ++l) {
      if (max_l >= 0 && l > max_l) continue;
      chain.push_back(l);
      self(self, l);
      chain.pop_back();
    }
  };
  rec(rec, l0);
  return out;
}

std::vector<HarmonicSignature> enumerate_signatures(int max_l, const std::vector<Variance>& variances) {
  std::vector<HarmonicSignature> out;
  const int k = static_cast<int>(variances.size());
  for (int l0 = 0; l0 <= max_l; ++l0)
    for (const auto& chain : enumerate_chains(l0, k, max_l)) {
      const int top = chain.empty() ? l0 : chain.back();
      for (int m = -top; m <= top; ++m)
        for (int n = -l0; n <= l0; ++n) out.emplace_back(l0, chain, variances, m, n);
    }
  std::sort(out.begin(), out.end());
  return out;
}

double explicit_coefficient(int l0, std::span<const int> chain, int m0, std::span<const int> mus) {
  if (chain.size() != mus.size() || std::abs(m0) > l0) return 0.0;
  double c = 1.0;
  int m_prev = m0;
  int l_prev = l0;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const int m = m_prev + mus[i];
    if (std::abs(m) > chain[i]) return 0.0;
    c *= slot_factor(chain[i], l_prev, m, m_prev, mus[i]);
    if (c == 0.0) return 0.0;
    m_prev = m;
    l_prev = chain[i];
  }
  return c;
}

ExpandedDTensor build_explicit(const HarmonicSignature& sig, double prune_tol) {
  sig.validate();
  const int k = sig.rank();
  ExpandedDTensor out{sig.l0, sig.n, sig.variances, {}};
  // Odometer over mu vectors in {-1, 0, 1}^k; m0 is then fixed by m.
  std::vector<int> mus(k, -1);
  for (;;) {
    int total = 0;
    for (int mu : mus) total += mu;
    const int m0 = sig.m - total;
    const double c = explicit_coefficient(sig.l0, sig.chain, m0, mus);
    if (c != 0.0) out.terms[{m0, mus}] += c;
    int i = k - 1;
    while (i >= 0 && mus[i] == 1) mus[i--] = -1;
    if (i < 0) break;
    ++mus[i];
  }
  return out.prune(prune_tol);
}

ExpandedDTensor build_recursive(const HarmonicSignature& sig, double prune_tol) {
  sig.validate();
  // Rank-0 base: the scalar harmonic itself. Each step builds every m of the
  // next level from all m' of the previous one.
  using Level = std::map<int, std::map<ExpandedDTensor::Key, double>>;
  Level level;
  for (int m0 = -sig.l0; m0 <= sig.l0; ++m0) level[m0][{m0, {}}] = 1.0;
  int l_prev = sig.l0;
  for (int i = 0; i < sig.rank(); ++i) {
    const int l = sig.chain[i];
    Level next;
    for (int m = -l; m <= l; ++m) {
      for (int mu = -1; mu <= 1; ++mu) {
        const int m_prev = m - mu;
        const auto it = level.find(m_prev);
        if (it == level.end()) continue;
        const double f = parity_sign(l - m) * std::sqrt(2.0 * l + 1.0) * three_j_value(l, l_prev, 1, m, -m_prev, -mu);
        if (f == 0.0) continue;
        for (const auto& [key, c] : it->second) {
          ExpandedDTensor::Key nk = key;
          nk.mus.push_back(mu);
          next[m][nk] += f * c;
        }
      }
    }
    level = std::move(next);
    l_prev = l;
  }
  ExpandedDTensor out{sig.l0, sig.n, sig.variances, {}};
  if (const auto it = level.find(sig.m); it != level.end())
    for (const auto& [key, c] : it->second) out.terms[key] = c;
  return out.prune(prune_tol);
}

ComponentTensor basis_tensor(int mu, Variance v) {
  if (mu < -1 || mu > 1) throw InvalidLabel("basis_tensor: mu must be -1, 0 or 1");
  ComponentTensor out({v});
  const double s = 1.0 / std::sqrt(2.0);
  using namespace std::complex_literals;
  switch (mu) {
    case 0:
      out[2] = 1.0;
      break;
    case 1:
      out[0] = -s;
      out[1] = -s * 1i;
      break;
    default:
      out[0] = s;
      out[1] = -s * 1i;
      break;
  }
  return out;
}

HarmonicSignature dual_signature(const HarmonicSignature& sig) {
  HarmonicSignature out = sig;
  for (auto& v : out.variances) v = dual(v);
  return out;
}

namespace constants {

HarmonicCombination kronecker() {
  return HarmonicCombination::single(HarmonicSignature(0, {1, 0}, {Variance::vector, Variance::covector}, 0, 0),
                                     -std::sqrt(3.0));
}

HarmonicCombination epsilon() {
  using namespace std::complex_literals;
  return HarmonicCombination::single(HarmonicSignature(0, {1, 1, 0}, Variance::covector, 0, 0), 1i * std::sqrt(6.0));
}

}  // namespace constants

}  // namespace dharm
