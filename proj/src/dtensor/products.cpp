#include "dharm/coupling.hpp"
#include "dharm/dtensor_algebra.hpp"
#include "dharm/errors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dharm {

namespace {

int parity_sign(int e) { return (e % 2 == 0) ? 1 : -1; }

// One admissible key of a factor: magnetic chain m_0..m_k, the mu vector and
// the product over slots of (-1)^(l_i - m_i) (l_i l_{i-1} 1; m_i -m_{i-1} -mu_i).
struct FactorKey {
  std::vector<int> ms;
  std::vector<int> mus;
  double weight = 0.0;
};

std::vector<FactorKey> factor_keys(const HarmonicSignature& sig) {
  std::vector<FactorKey> out;
  const int k = sig.rank();
  std::vector<int> mus(k, -1);
  for (;;) {
    int total = 0;
    for (int mu : mus) total += mu;
    const int m0 = sig.m - total;
    if (std::abs(m0) <= sig.l0) {
      FactorKey key{{m0}, mus, 1.0};
      for (int i = 1; i <= k && key.weight != 0.0; ++i) {
        const int mi = key.ms.back() + mus[i - 1];
        key.ms.push_back(mi);
        if (std::abs(mi) > sig.l(i)) {
          key.weight = 0.0;
          break;
        }
        key.weight *= parity_sign(sig.l(i) - mi) * three_j_value(sig.l(i), sig.l(i - 1), 1, mi, -key.ms[i - 1], -mus[i - 1]);
      }
      if (key.weight != 0.0) out.push_back(std::move(key));
    }
    int i = k - 1;
    while (i >= 0 && mus[i] == 1) mus[i--] = -1;
    if (i < 0) break;
    ++mus[i];
  }
  return out;
}

double degeneracy_product(int l0, std::span<const int> chain) {
  double p = 2.0 * l0 + 1.0;
  for (int l : chain) p *= 2.0 * l + 1.0;
  return p;
}

}  // namespace

HarmonicCombination tensor_product_closed(const HarmonicSignature& a, const HarmonicSignature& b, double prune_tol) {
  a.validate();
  b.validate();
  const int k = a.rank();
  const int kb = b.rank();
  std::vector<Variance> vars = a.variances;
  vars.insert(vars.end(), b.variances.begin(), b.variances.end());
  HarmonicCombination out(vars);

  const std::vector<FactorKey> keys_a = factor_keys(a);
  const std::vector<FactorKey> keys_b = factor_keys(b);
  const int m = a.m + b.m;
  const int n = a.n + b.n;
  const double dims_ab = degeneracy_product(a.l0, a.chain) * degeneracy_product(b.l0, b.chain);

  for (int L0 = std::abs(a.l0 - b.l0); L0 <= a.l0 + b.l0; ++L0) {
    if (std::abs(n) > L0) continue;
    const double n_coupling = three_j_value(a.l0, b.l0, L0, a.n, b.n, -n);
    if (n_coupling == 0.0) continue;
    for (const auto& chain : enumerate_chains(L0, k + kb)) {
      const int top = chain.empty() ? L0 : chain.back();
      if (std::abs(m) > top) continue;
      auto lpp = [&](int i) { return i == 0 ? L0 : chain[i - 1]; };
      double total = 0.0;
      for (const auto& ka : keys_a) {
        for (const auto& kb_ : keys_b) {
          const int M0 = ka.ms[0] + kb_.ms[0];
          if (std::abs(M0) > L0) continue;
          double term = parity_sign(-ka.ms[0] - kb_.ms[0] - a.n - b.n) *
                        three_j_value(a.l0, b.l0, L0, ka.ms[0], kb_.ms[0], -M0) * n_coupling * ka.weight * kb_.weight;
          if (term == 0.0) continue;
          // Double-primed magnetic chain: first factor's mus, then the second's.
          int m_prev = M0;
          for (int i = 1; i <= k + kb && term != 0.0; ++i) {
            const int mu = i <= k ? ka.mus[i - 1] : kb_.mus[i - k - 1];
            const int mi = m_prev + mu;
            if (std::abs(mi) > lpp(i)) {
              term = 0.0;
              break;
            }
            // The first factor's slot phases (-1)^(l_i - m_i) sit in its weight;
            // the remaining (-1)^(l''_i - m''_i) is applied here.
            term *= parity_sign(lpp(i) - mi) * three_j_value(lpp(i), lpp(i - 1), 1, mi, -m_prev, -mu);
            m_prev = mi;
          }
          total += term;
        }
      }
      total *= std::sqrt(dims_ab * degeneracy_product(L0, chain));
      if (std::abs(total) > prune_tol) out.add(HarmonicSignature(L0, chain, vars, m, n), total);
    }
  }
  return out;
}

HarmonicCombination tensor_product_closed(const HarmonicCombination& a, const HarmonicCombination& b, double prune_tol) {
  std::vector<Variance> vars = a.variances();
  vars.insert(vars.end(), b.variances().begin(), b.variances().end());
  HarmonicCombination out(vars);
  for (const auto& [sa, ca] : a.terms())
    for (const auto& [sb, cb] : b.terms()) out.add(tensor_product_closed(sa, sb, 0.0), ca * cb);
  return out.prune(prune_tol);
}

Reprojection reproject(const ExpandedDTensor& x, double prune_tol) {
  const int k = x.rank();
  Reprojection out{HarmonicCombination(x.variances), 0.0};
  std::map<int, std::vector<const std::pair<const ExpandedDTensor::Key, std::complex<double>>*>> by_m;
  for (const auto& term : x.terms) {
    int m = term.first.m0;
    for (int mu : term.first.mus) m += mu;
    by_m[m].push_back(&term);
  }
  std::map<ExpandedDTensor::Key, std::complex<double>> rebuilt;
  if (std::abs(x.n) <= x.l0) {
    for (const auto& chain : enumerate_chains(x.l0, k)) {
      const int top = chain.empty() ? x.l0 : chain.back();
      for (const auto& [m, terms] : by_m) {
        if (std::abs(m) > top) continue;
        std::complex<double> c = 0.0;
        for (const auto* t : terms) c += explicit_coefficient(x.l0, chain, t->first.m0, t->first.mus) * t->second;
        if (std::abs(c) <= prune_tol) continue;
        const HarmonicSignature sig(x.l0, chain, x.variances, m, x.n);
        out.combination.add(sig, c);
        for (const auto& [key, e] : build_explicit(sig, 0.0).terms) rebuilt[key] += c * e;
      }
    }
  }
  for (const auto& [key, v] : x.terms) {
    const auto it = rebuilt.find(key);
    out.residual = std::max(out.residual, std::abs(v - (it == rebuilt.end() ? 0.0 : it->second)));
  }
  for (const auto& [key, v] : rebuilt)
    if (!x.terms.contains(key)) out.residual = std::max(out.residual, std::abs(v));
  return out;
}

HarmonicCombination tensor_product_oracle(const ExpandedDTensor& a, const ExpandedDTensor& b, double prune_tol) {
  std::vector<Variance> vars = a.variances;
  vars.insert(vars.end(), b.variances.begin(), b.variances.end());
  // Y_{l0,m0,n} Y_{l0',m0',n'} -> sum over L of c_L Y_{L, m0+m0', n+n'}.
  std::map<int, ExpandedDTensor> by_l;
  std::map<std::pair<int, int>, HarmonicExpansion> products;
  for (const auto& [ka, ca] : a.terms) {
    for (const auto& [kb, cb] : b.terms) {
      auto it = products.find({ka.m0, kb.m0});
      if (it == products.end())
        it = products
                 .emplace(std::pair{ka.m0, kb.m0},
                          product_expand(AngularTriple(a.l0, ka.m0, a.n), AngularTriple(b.l0, kb.m0, b.n), 0.0))
                 .first;
      ExpandedDTensor::Key key{ka.m0 + kb.m0, ka.mus};
      key.mus.insert(key.mus.end(), kb.mus.begin(), kb.mus.end());
      for (const auto& [t, c] : it->second.terms()) {
        auto& x = by_l[t.l];
        x.l0 = t.l;
        x.n = t.n;
        x.variances = vars;
        x.terms[key] += ca * cb * c;
      }
    }
  }
  HarmonicCombination out(vars);
  for (auto& [l, x] : by_l) {
    x.prune(prune_tol);
    const Reprojection r = reproject(x, prune_tol);
    if (r.residual > 1e-9)
      throw std::logic_error("tensor_product_oracle: reprojection residual " + std::to_string(r.residual));
    out.add(r.combination);
  }
  return out.prune(prune_tol);
}

HarmonicExpansion scalar_product(const HarmonicSignature& a, const HarmonicSignature& b, double prune_tol) {
  a.validate();
  b.validate();
  if (a.rank() != 1 || b.rank() != 1) throw std::invalid_argument("scalar_product: both signatures must have rank 1");
  if (a.variances[0] == b.variances[0])
    throw VarianceMismatch("scalar_product: needs one vector and one covector signature");
  const int l0 = a.l0, l1 = a.chain[0], lp0 = b.l0, lp1 = b.chain[0];
  const int m = a.m + b.m;
  const int n = a.n + b.n;
  HarmonicExpansion out;
  const int lo = std::max({std::abs(l0 - lp0), std::abs(l1 - lp1), std::abs(m), std::abs(n)});
  const int hi = std::min(l0 + lp0, l1 + lp1);
  for (int l = lo; l <= hi; ++l) {
    const double c = parity_sign(l0 + lp1 + l + m + n) *
                     std::sqrt((2.0 * l0 + 1) * (2.0 * l1 + 1) * (2.0 * lp0 + 1) * (2.0 * lp1 + 1) * (2.0 * l + 1)) *
                     three_j_value(l, lp0, l0, -n, b.n, a.n) * three_j_value(l, lp1, l1, -m, b.m, a.m) *
                     six_j_value(1, l0, l1, l, lp1, lp0);
    if (c != 0.0) out.add(AngularTriple(l, m, n), c);
  }
  return out.prune(prune_tol);
}

}  // namespace dharm
