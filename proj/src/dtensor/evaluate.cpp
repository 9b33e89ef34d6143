#include "dharm/dtensor_algebra.hpp"
#include "dharm/errors.hpp"
#include "dharm/kernels.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

namespace dharm {

namespace {

using Basis = std::array<std::array<std::complex<double>, 3>, 3>;

const Basis& basis_components() {
  static const Basis table = [] {
    Basis b{};
    for (int mu = -1; mu <= 1; ++mu) {
      const ComponentTensor e = basis_tensor(mu, Variance::vector);
      for (int a = 0; a < 3; ++a) b[mu + 1][a] = e[a];
    }
    return b;
  }();
  return table;
}

// Components of e_{mu_1} (x) ... (x) e_{mu_k}, accumulated with weight c.
void add_monomial(std::span<std::complex<double>> out, std::span<const int> mus, std::complex<double> c) {
  const Basis& b = basis_components();
  const std::size_t k = mus.size();
  for (std::size_t flat = 0; flat < out.size(); ++flat) {
    std::complex<double> v = c;
    std::size_t rest = flat;
    for (std::size_t s = k; s-- > 0;) {
      v *= b[mus[s] + 1][rest % 3];
      rest /= 3;
    }
    out[flat] += v;
  }
}

}  // namespace

ComponentTensor evaluate(const ExpandedDTensor& x, const AnglePoint& p) {
  ComponentTensor out(x.variances);
  int cached_m0 = x.l0 + 1;
  std::complex<double> y = 0.0;
  for (const auto& [key, c] : x.terms) {
    if (key.m0 != cached_m0) {
      cached_m0 = key.m0;
      y = eval_harmonic(AngularTriple(x.l0, key.m0, x.n), p);
    }
    add_monomial(out.data(), key.mus, c * y);
  }
  return out;
}

ComponentTensor evaluate(const HarmonicSignature& sig, const AnglePoint& p) { return evaluate(build_explicit(sig), p); }

ComponentTensor evaluate(const HarmonicCombination& c, const AnglePoint& p) {
  ComponentTensor out(c.variances());
  for (const auto& [sig, coeff] : c.terms()) {
    ComponentTensor t = evaluate(sig, p);
    t *= coeff;
    out += t;
  }
  return out;
}

std::pair<int, HarmonicSignature> conjugate_signature(const HarmonicSignature& sig) {
  sig.validate();
  HarmonicSignature out = sig;
  out.m = -sig.m;
  out.n = -sig.n;
  const int e = sig.l0 + sig.top_l() + sig.m + sig.n + sig.rank();
  return {(e % 2 == 0) ? 1 : -1, out};
}

GridField sample_dtensor(const AngularGrid& grid, const HarmonicSignature& sig) {
  const ExpandedDTensor x = build_explicit(sig);
  std::size_t components = 1;
  for (int i = 0; i < sig.rank(); ++i) components *= 3;
  GridField out(components, grid.size());
  // Group the monomials by m0: each group shares one sampled harmonic.
  std::map<int, std::vector<std::complex<double>>> groups;
  for (const auto& [key, c] : x.terms) {
    auto& comps = groups[key.m0];
    if (comps.empty()) comps.assign(components, 0.0);
    add_monomial(comps, key.mus, c);
  }
  for (const auto& [m0, comps] : groups) {
    const GridField y = sample_harmonic(grid, AngularTriple(sig.l0, m0, sig.n));
    for (std::size_t a = 0; a < components; ++a)
      if (comps[a] != 0.0) kernels::complex_axpy(comps[a], y.re(0), y.im(0), out.re(a), out.im(a));
  }
  return out;
}

QuadratureSpec minimal_quadrature(const HarmonicSignature& a, const HarmonicSignature& b) {
  // Components mix every m0 in -l0..l0, so the phi frequency bound uses l0.
  return {std::max(2, (a.l0 + b.l0 + 2) / 2), std::max(2, a.l0 + b.l0 + 1), std::max(2, std::abs(a.n) + std::abs(b.n) + 1)};
}

std::complex<double> inner_product_integral(const HarmonicSignature& a, const HarmonicSignature& b,
                                            const QuadratureSpec& quad) {
  a.validate();
  b.validate();
  if (a.rank() != b.rank())
    throw VarianceMismatch("inner_product_integral: ranks differ (" + std::to_string(a.rank()) + " vs " +
                           std::to_string(b.rank()) + ")");
  for (int s = 0; s < a.rank(); ++s)
    if (b.variances[s] != dual(a.variances[s]))
      throw VarianceMismatch("inner_product_integral: slot " + std::to_string(s) + " is not paired with its dual");
  quad.validate();
  const QuadratureSpec need = minimal_quadrature(a, b);
  if (quad.gauss_order < need.gauss_order || quad.phi_points < need.phi_points || quad.beta_points < need.beta_points) {
    std::ostringstream os;
    os << "inner_product_integral: quadrature (gauss " << quad.gauss_order << ", phi " << quad.phi_points << ", beta "
       << quad.beta_points << ") is not exact for this pair; needs at least (gauss " << need.gauss_order << ", phi "
       << need.phi_points << ", beta " << need.beta_points << ")";
    throw QuadratureOrderError(os.str());
  }
  const AngularGrid grid(quad);
  return integrate_pairing(grid, sample_dtensor(grid, a), sample_dtensor(grid, b));
}

}  // namespace dharm
