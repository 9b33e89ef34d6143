#include "dharm/coupling.hpp"
#include "dharm/dtensor_algebra.hpp"
#include "dharm/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace dharm {

namespace {

int parity_sign(int e) { return (e % 2 == 0) ? 1 : -1; }

void require_adjacent_pair(const HarmonicSignature& sig, int slot, const char* what) {
  if (slot < 0 || slot + 1 >= sig.rank())
    throw std::out_of_range(std::string(what) + ": slots " + std::to_string(slot) + ", " + std::to_string(slot + 1) +
                            " do not exist at rank " + std::to_string(sig.rank()));
}

}  // namespace

HarmonicCombination transpose_adjacent(const HarmonicSignature& sig, int slot) {
  sig.validate();
  require_adjacent_pair(sig, slot, "transpose_adjacent");
  if (sig.variances[slot] != sig.variances[slot + 1])
    throw VarianceMismatch("transpose_adjacent: slots " + std::to_string(slot) + " and " + std::to_string(slot + 1) +
                           " of " + sig.to_string() + " have different variances");
  const int i = slot + 1;
  const int l_before = sig.l(i - 1);
  const int l_mid = sig.l(i);
  const int l_after = sig.l(i + 1);
  HarmonicCombination out(sig.variances);
  const int lo = std::max(std::abs(l_before - 1), std::abs(l_after - 1));
  const int hi = std::min(l_before + 1, l_after + 1);
  for (int l = lo; l <= hi; ++l) {
    const double c = parity_sign(l + l_mid) * std::sqrt((2.0 * l + 1.0) * (2.0 * l_mid + 1.0)) *
                     six_j_value(l_before, l_mid, 1, l_after, l, 1);
    if (c == 0.0) continue;
    HarmonicSignature t = sig;
    t.chain[i - 1] = l;
    t.validate();
    out.add(t, c);
  }
  return out.prune();
}

HarmonicCombination transpose_adjacent(const HarmonicCombination& c, int slot) {
  HarmonicCombination out(c.variances());
  for (const auto& [sig, coeff] : c.terms()) out.add(transpose_adjacent(sig, slot), coeff);
  return out.prune();
}

std::vector<int> adjacent_decomposition(std::span<const int> perm) {
  const int k = static_cast<int>(perm.size());
  std::vector<int> check(perm.begin(), perm.end());
  std::sort(check.begin(), check.end());
  for (int s = 0; s < k; ++s)
    if (check[s] != s) throw std::invalid_argument("adjacent_decomposition: not a permutation of 0..k-1");
  std::vector<int> cur(k);
  std::iota(cur.begin(), cur.end(), 0);
  std::vector<int> swaps;
  for (int s = 0; s < k; ++s) {
    const int q = static_cast<int>(std::find(cur.begin(), cur.end(), perm[s]) - cur.begin());
    for (int t = q - 1; t >= s; --t) {
      std::swap(cur[t], cur[t + 1]);
      swaps.push_back(t);
    }
  }
  return swaps;
}

HarmonicCombination permute(const HarmonicCombination& c, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != c.rank()) throw std::invalid_argument("permute: permutation length differs from rank");
  HarmonicCombination out = c;
  for (int t : adjacent_decomposition(perm)) out = transpose_adjacent(out, t);
  return out;
}

HarmonicCombination permute(const HarmonicSignature& sig, std::span<const int> perm) {
  return permute(HarmonicCombination::single(sig), perm);
}

HarmonicCombination contract_adjacent(const HarmonicSignature& sig, int slot) {
  sig.validate();
  require_adjacent_pair(sig, slot, "contract_adjacent");
  if (sig.variances[slot] == sig.variances[slot + 1])
    throw VarianceMismatch("contract_adjacent: slots " + std::to_string(slot) + " and " + std::to_string(slot + 1) +
                           " of " + sig.to_string() + " have the same variance");
  std::vector<Variance> vars = sig.variances;
  vars.erase(vars.begin() + slot, vars.begin() + slot + 2);
  HarmonicCombination out(vars);
  const int i = slot + 1;
  if (sig.l(i - 1) != sig.l(i + 1)) return out;
  const int l_mid = sig.l(i);
  const int l_after = sig.l(i + 1);
  std::vector<int> chain = sig.chain;
  chain.erase(chain.begin() + (i - 1), chain.begin() + (i + 1));
  out.add(HarmonicSignature(sig.l0, std::move(chain), std::move(vars), sig.m, sig.n),
          parity_sign(l_after - l_mid) * std::sqrt((2.0 * l_mid + 1.0) / (2.0 * l_after + 1.0)));
  return out;
}

HarmonicCombination contract_adjacent(const HarmonicCombination& c, int slot) {
  if (slot < 0 || slot + 1 >= c.rank()) throw std::out_of_range("contract_adjacent: slot out of range");
  std::vector<Variance> vars = c.variances();
  vars.erase(vars.begin() + slot, vars.begin() + slot + 2);
  HarmonicCombination out(vars);
  for (const auto& [sig, coeff] : c.terms()) out.add(contract_adjacent(sig, slot), coeff);
  return out.prune();
}

HarmonicCombination contract_general(const HarmonicCombination& c, int slot_a, int slot_b, ContractionPath path) {
  const int k = c.rank();
  if (slot_a > slot_b) std::swap(slot_a, slot_b);
  if (slot_a < 0 || slot_b >= k || slot_a == slot_b)
    throw std::out_of_range("contract_general: slots must be distinct and below the rank");
  const auto& vars = c.variances();
  const Variance va = vars[slot_a];
  const Variance vb = vars[slot_b];
  if (va == vb) throw VarianceMismatch("contract_general: both slots have the same variance");
  // Slot a passes the leading block of its own variance; slot b must then
  // be able to pass everything left between them.
  int meet = slot_a;
  while (meet + 1 < slot_b && vars[meet + 1] == va) ++meet;
  for (int s = meet + 1; s < slot_b; ++s)
    if (vars[s] != vb)
      throw VarianceMismatch("contract_general: slots between " + std::to_string(slot_a) + " and " +
                             std::to_string(slot_b) + " block both slots");
  std::vector<int> first, second;
  for (int t = slot_a; t < meet; ++t) first.push_back(t);
  for (int t = slot_b - 1; t > meet; --t) second.push_back(t);
  HarmonicCombination out = c;
  if (path == ContractionPath::second_moves_first) std::swap(first, second);
  for (int t : first) out = transpose_adjacent(out, t);
  for (int t : second) out = transpose_adjacent(out, t);
  return contract_adjacent(out, meet);
}

HarmonicCombination contract_general(const HarmonicSignature& sig, int slot_a, int slot_b, ContractionPath path) {
  return contract_general(HarmonicCombination::single(sig), slot_a, slot_b, path);
}

}  // namespace dharm
