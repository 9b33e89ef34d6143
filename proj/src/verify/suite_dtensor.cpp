#include "dharm/dtensor_algebra.hpp"
#include "dharm/errors.hpp"
#include "dharm/oracles.hpp"
#include "suites.hpp"

#include <numbers>

namespace dharm::verify {

namespace {

using enum Variance;

constexpr double kVolume = 8.0 * std::numbers::pi * std::numbers::pi;

std::vector<Variance> all_vectors(int k) { return std::vector<Variance>(k, vector); }

// Every variance list of length k.
std::vector<std::vector<Variance>> variance_patterns(int k) {
  std::vector<std::vector<Variance>> out;
  for (int bits = 0; bits < (1 << k); ++bits) {
    std::vector<Variance> v(k);
    for (int s = 0; s < k; ++s) v[s] = (bits >> (k - 1 - s)) & 1 ? covector : vector;
    out.push_back(std::move(v));
  }
  return out;
}

double expansion_diff(const ExpandedDTensor& a, const ExpandedDTensor& b) {
  double worst = 0.0;
  for (const auto& [key, c] : a.terms) {
    const auto it = b.terms.find(key);
    worst = std::max(worst, std::abs(c - (it == b.terms.end() ? std::complex<double>{} : it->second)));
  }
  for (const auto& [key, c] : b.terms)
    if (!a.terms.contains(key)) worst = std::max(worst, std::abs(c));
  if (a.l0 != b.l0 || a.n != b.n) worst = std::max(worst, 1.0);
  return worst;
}

CheckResult eigen(const RunConfig& config) {
  auto rng = oracles::check_rng(config.seed, "dtensor.c05");
  FdOptions opt;
  opt.step = config.fd_step;
  Worst w;
  for (int k = 1; k <= 2; ++k)
    for (const auto& sig : enumerate_signatures(3, all_vectors(k))) {
      const TensorField f = dtensor_field(sig);
      const CartesianPoint p = oracles::point_at(oracles::random_angles(rng, 0.2));
      const ComponentTensor y = f(p);
      const int lk = sig.top_l();
      const std::string at = sig.to_string();
      w.update(ComponentTensor::max_abs_diff(rotation_operator(f, OperatorComponent::z, p, opt), double(sig.m) * y),
               "R_z " + at);
      w.update(ComponentTensor::max_abs_diff(rotation_casimir(f, p, opt), lk * (lk + 1.0) * y), "R^2 " + at);
      for (const Ladder dir : {Ladder::raise, Ladder::lower}) {
        const int step = dir == Ladder::raise ? 1 : -1;
        ComponentTensor expected(y.variances());
        if (std::abs(sig.m + step) <= lk) {
          HarmonicSignature target = sig;
          target.m += step;
          expected = std::sqrt((lk - step * sig.m) * (lk + step * sig.m + 1.0)) * dtensor_field(target)(p);
        }
        const auto oc = dir == Ladder::raise ? OperatorComponent::plus : OperatorComponent::minus;
        w.update(ComponentTensor::max_abs_diff(rotation_operator(f, oc, p, opt), expected), "R_pm " + at);
      }
    }
  return make_result("", 5, w, 1e-5,
                     "R_z, R^2 eigenvalues and R_pm ladders of harmonic d-tensors by finite-rotation pullback, "
                     "k <= 2, l's <= 3");
}

CheckResult construction(const RunConfig& config) {
  Worst w;
  for (int k = 0; k <= 3; ++k)
    for (const auto& sig : enumerate_signatures(3, all_vectors(k)))
      w.update(expansion_diff(build_recursive(sig, config.prune_tolerance), build_explicit(sig, config.prune_tolerance)),
               sig.to_string());
  return make_result("", 8, w, 1e-12, "build_recursive vs build_explicit coefficients, k <= 3, l's <= 3");
}

ComponentTensor levi_civita() {
  ComponentTensor e({covector, covector, covector});
  e.at({0, 1, 2}) = e.at({1, 2, 0}) = e.at({2, 0, 1}) = 1.0;
  e.at({0, 2, 1}) = e.at({2, 1, 0}) = e.at({1, 0, 2}) = -1.0;
  return e;
}

CheckResult constants_values(const RunConfig& config) {
  auto rng = oracles::check_rng(config.seed, "dtensor.c09.values");
  const oracles::CombinationEvaluator delta(constants::kronecker());
  const oracles::CombinationEvaluator eps(constants::epsilon());
  const ComponentTensor id = oracles::identity(vector, covector);
  const ComponentTensor lc = levi_civita();
  Worst w;
  for (int i = 0; i < 50; ++i) {
    const AnglePoint p = oracles::random_angles(rng, 0.0);
    w.update(ComponentTensor::max_abs_diff(delta(p), id), "Kronecker");
    w.update(ComponentTensor::max_abs_diff(eps(p), lc), "epsilon");
  }
  return make_result("", 9, w, 1e-14, "-sqrt(3) Y(0|1,0) = delta and i sqrt(6) Y(0|1,1,0) = epsilon, 50 random points");
}

CheckResult constants_invariance(const RunConfig& config) {
  auto rng = oracles::check_rng(config.seed, "dtensor.c09.invariance");
  FdOptions opt;
  opt.step = config.fd_step;
  const TensorField delta = dtensor_field(constants::kronecker());
  const TensorField eps = dtensor_field(constants::epsilon());
  Worst w;
  for (int i = 0; i < 10; ++i) {
    const CartesianPoint p = oracles::point_at(oracles::random_angles(rng, 0.2));
    for (const auto c : {OperatorComponent::x, OperatorComponent::y, OperatorComponent::z}) {
      w.update(rotation_operator(delta, c, p, opt).max_abs(), "Kronecker");
      w.update(rotation_operator(eps, c, p, opt).max_abs(), "epsilon");
    }
  }
  return make_result("", 9, w, 1e-6, "R_x, R_y, R_z annihilate both constants, 10 random points");
}

CheckResult transpose_contract(const RunConfig& config) {
  auto rng = oracles::check_rng(config.seed, "dtensor.c10.pointwise");
  std::vector<AnglePoint> points;
  for (int i = 0; i < 50; ++i) points.push_back(oracles::random_angles(rng, 0.0));
  Worst w;
  for (int k = 2; k <= 3; ++k)
    for (const auto& vars : variance_patterns(k))
      for (const auto& sig : enumerate_signatures(2, vars)) {
        const oracles::CombinationEvaluator source(HarmonicCombination::single(sig), config.prune_tolerance);
        std::vector<ComponentTensor> values;
        for (const auto& p : points) values.push_back(source(p));
        for (int s = 0; s + 1 < k; ++s) {
          const bool same = vars[s] == vars[s + 1];
          const HarmonicCombination c =
              same ? transpose_adjacent(sig, s) : contract_adjacent(sig, s);
          const oracles::CombinationEvaluator result(c, config.prune_tolerance);
          for (std::size_t i = 0; i < points.size(); ++i) {
            const ComponentTensor expected = same ? values[i].swapped(s, s + 1) : values[i].traced(s, s + 1);
            w.update(ComponentTensor::max_abs_diff(result(points[i]), expected),
                     (same ? "transpose " : "contract ") + sig.to_string() + " slot " + std::to_string(s));
          }
        }
      }
  return make_result("", 10, w, 1e-10,
                     "transpose_adjacent / contract_adjacent vs component swap / trace, 50 random points, rank <= 3, "
                     "l's <= 2, every variance pattern");
}

CheckResult trace_formula(const RunConfig&) {
  Worst w;
  for (const auto& sig : enumerate_signatures(3, {vector, covector})) {
    const int l0 = sig.l0, l1 = sig.chain[0], l2 = sig.chain[1];
    HarmonicCombination expected{std::vector<Variance>{}};
    if (l0 == l2)
      expected.add(HarmonicSignature(l0, {}, std::vector<Variance>{}, sig.m, sig.n),
                   ((l0 - l1) % 2 ? -1.0 : 1.0) * std::sqrt((2.0 * l1 + 1.0) / (2.0 * l0 + 1.0)));
    w.update(HarmonicCombination::max_abs_diff(contract_adjacent(sig, 0), expected), sig.to_string());
  }
  return make_result("", 10, w, 1e-12,
                     "tr Y(l0|l1,l2) = (-1)^(l0-l1) sqrt((2 l1+1)/(2 l0+1)) delta_{l0 l2} Y_{l0,m,n} as combinations, "
                     "l's <= 3");
}

CheckResult product_closed_vs_oracle(const RunConfig& config) {
  std::vector<std::vector<HarmonicSignature>> by_rank;
  std::map<HarmonicSignature, ExpandedDTensor> expansions;
  for (int k = 0; k <= 2; ++k) {
    by_rank.push_back(enumerate_signatures(2, all_vectors(k)));
    for (const auto& s : by_rank.back()) expansions.emplace(s, build_explicit(s, config.prune_tolerance));
  }
  Worst w;
  for (int k = 0; k <= 2; ++k)
    for (int kp = 0; k + kp <= 2; ++kp)
      for (const auto& a : by_rank[k])
        for (const auto& b : by_rank[kp]) {
          const HarmonicCombination closed = tensor_product_closed(a, b, config.prune_tolerance);
          const HarmonicCombination oracle =
              tensor_product_oracle(expansions.at(a), expansions.at(b), config.prune_tolerance);
          w.update(HarmonicCombination::max_abs_diff(closed, oracle), a.to_string() + " x " + b.to_string());
        }
  return make_result("", 11, w, 1e-10,
                     "tensor_product_closed vs expansion-and-reprojection oracle, k + k' <= 2, l's <= 2");
}

CheckResult scalar_product_pointwise(const RunConfig& config) {
  auto rng = oracles::check_rng(config.seed, "dtensor.c11.scalar_product");
  std::vector<AnglePoint> points;
  for (int i = 0; i < 10; ++i) points.push_back(oracles::random_angles(rng, 0.0));
  const auto vs = enumerate_signatures(2, {vector});
  const auto cs = enumerate_signatures(2, {covector});
  std::map<HarmonicSignature, std::vector<ComponentTensor>> values;
  for (const auto* list : {&vs, &cs})
    for (const auto& s : *list) {
      const ExpandedDTensor x = build_explicit(s, config.prune_tolerance);
      for (const auto& p : points) values[s].push_back(evaluate(x, p));
    }
  Worst w;
  for (const auto& a : vs)
    for (const auto& b : cs)
      for (const bool swap : {false, true}) {
        const HarmonicExpansion x =
            swap ? scalar_product(b, a, config.prune_tolerance) : scalar_product(a, b, config.prune_tolerance);
        for (std::size_t i = 0; i < points.size(); ++i) {
          std::complex<double> dot = 0.0;
          for (int c = 0; c < 3; ++c) dot += values[a][i][c] * values[b][i][c];
          w.update(std::abs(x.evaluate(points[i]) - dot), a.to_string() + " . " + b.to_string());
        }
      }
  return make_result("", 11, w, 1e-10, "scalar_product vs pointwise dot product, 10 random points, l's <= 2");
}

CheckResult gram(const RunConfig& config) {
  Worst w;
  double off = 0.0;
  std::size_t total = 0;
  const QuadratureSpec q{8, 16, 16};
  const AngularGrid grid(q);
  for (int k = 0; k <= 2; ++k) {
    const auto sigs = enumerate_signatures(3, all_vectors(k));
    for (const auto& a : sigs) {
      const QuadratureSpec need = minimal_quadrature(a, dual_signature(a));
      if (need.gauss_order > q.gauss_order || need.phi_points > q.phi_points || need.beta_points > q.beta_points)
        throw QuadratureOrderError("d-tensor Gram matrix: fixed rule below the exact order for " + a.to_string());
    }
    // Covector components equal vector components, so the dual partners sample identically.
    const auto g = gram_matrix(
        grid, sigs.size(), [&](std::size_t i) { return sample_dtensor(grid, sigs[i]); }, 64);
    total += sigs.size();
    for (std::size_t i = 0; i < sigs.size(); ++i)
      for (std::size_t j = 0; j < sigs.size(); ++j) {
        const double e = std::abs(g[i][j] - (i == j ? kVolume : 0.0)) / kVolume;
        if (i != j) off = std::max(off, e);
        w.update(e, sigs[i].to_string() + " x " + sigs[j].to_string());
      }
  }
  // The library's pairing of a signature with its dual, on its own minimal rule.
  for (const auto& a : enumerate_signatures(3, {vector, vector})) {
    if (a.m != a.n || a.l0 != a.chain[1]) continue;
    const HarmonicSignature b = dual_signature(a);
    w.update(std::abs(inner_product_integral(a, b, minimal_quadrature(a, b)) - kVolume) / kVolume,
             "inner_product_integral " + a.to_string());
  }
  std::ostringstream os;
  os << "Gram matrices / 8 pi^2 of " << total << " signatures (rank <= 2, l's <= 3) on Gauss-8 x 16 x 16; max "
     << "off-diagonal " << off;
  return make_result("", 12, w, config.quadrature_tolerance.value_or(1e-8), os.str());
}

CheckResult conjugation(const RunConfig& config) {
  auto rng = oracles::check_rng(config.seed, "dtensor.conjugate");
  Worst w;
  for (int k = 0; k <= 2; ++k)
    for (const auto& sig : enumerate_signatures(2, all_vectors(k))) {
      const auto [phase, sc] = conjugate_signature(sig);
      const AnglePoint p = oracles::random_angles(rng, 0.0);
      w.update(ComponentTensor::max_abs_diff(evaluate(sig, p).conj(), double(phase) * evaluate(sc, p)),
               sig.to_string());
    }
  return make_result("", 0, w, 1e-12, "conj(Y_sig) = phase * Y_sig' pointwise, k <= 2, l's <= 2");
}

CheckResult permutation(const RunConfig& config) {
  auto rng = oracles::check_rng(config.seed, "dtensor.permute");
  Worst w;
  const std::vector<std::vector<int>> perms{{1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (const auto& sig : enumerate_signatures(2, all_vectors(3))) {
    const AnglePoint p = oracles::random_angles(rng, 0.0);
    const ComponentTensor v = evaluate(sig, p);
    for (const auto& perm : perms)
      w.update(ComponentTensor::max_abs_diff(evaluate(permute(sig, perm), p), v.permuted(perm)), sig.to_string());
  }
  const AnglePoint p = oracles::random_angles(rng, 0.0);
  const std::vector<int> reversal{2, 1, 0};
  w.update(ComponentTensor::max_abs_diff(evaluate(permute(constants::epsilon(), reversal), p), -1.0 * levi_civita()),
           "epsilon reversal");
  return make_result("", 0, w, 1e-10, "permute vs component permutation, rank 3, l's <= 2; epsilon reversal = -epsilon");
}

CheckResult general_contraction(const RunConfig& config) {
  auto rng = oracles::check_rng(config.seed, "dtensor.contract_general");
  Worst w;
  const std::vector<Variance> vars{vector, vector, covector, covector};
  for (const auto& sig : enumerate_signatures(1, vars)) {
    const AnglePoint p = oracles::random_angles(rng, 0.0);
    const ComponentTensor expected = evaluate(sig, p).traced(0, 3);
    for (const auto path : {ContractionPath::first_moves_first, ContractionPath::second_moves_first})
      w.update(ComponentTensor::max_abs_diff(evaluate(contract_general(sig, 0, 3, path), p), expected),
               sig.to_string());
  }
  return make_result("", 0, w, 1e-10, "contract_general slots 0, 3 of (v,v,c,c) on both paths vs component trace, l's <= 1");
}

}  // namespace

std::vector<Check> dtensor_checks() {
  return {
      {"dtensor.c05.eigen_ladder", 5, eigen},
      {"dtensor.c08.construction", 8, construction},
      {"dtensor.c09.constant_values", 9, constants_values},
      {"dtensor.c09.constant_invariance", 9, constants_invariance},
      {"dtensor.c10.pointwise", 10, transpose_contract},
      {"dtensor.c10.trace_formula", 10, trace_formula},
      {"dtensor.c11.tensor_product", 11, product_closed_vs_oracle},
      {"dtensor.c11.scalar_product", 11, scalar_product_pointwise},
      {"dtensor.c12.gram_matrix", 12, gram},
      {"dtensor.conjugation", 0, conjugation},
      {"dtensor.contract_general", 0, general_contraction},
      {"dtensor.permute", 0, permutation},
  };
}

}  // namespace dharm::verify
