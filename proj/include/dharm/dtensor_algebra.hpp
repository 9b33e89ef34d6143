#pragma once

#include "dharm/dtensor.hpp"
#include "dharm/quadrature.hpp"
#include "dharm/scalar_harmonics.hpp"

#include <complex>
#include <span>
#include <vector>

namespace dharm {

/// Constant basis tensor e_mu (vector) or e^mu (covector), mu in {-1, 0, 1}.
ComponentTensor basis_tensor(int mu, Variance v);

/// All valid signatures with l0 <= max_l, chain entries <= max_l, the given
/// variance list (its length is the rank) and every admissible m, n. Sorted.
std::vector<HarmonicSignature> enumerate_signatures(int max_l, const std::vector<Variance>& variances);
/// Chains of length k starting at l0 with entries <= max_l (unbounded when
/// max_l < 0) that satisfy the step condition.
std::vector<std::vector<int>> enumerate_chains(int l0, int k, int max_l = -1);

/// Coefficient of the key (m0, mus) in the explicit product formula for a
/// chain starting at l0. Zero when the key is not admissible.
double explicit_coefficient(int l0, std::span<const int> chain, int m0, std::span<const int> mus);

/// Expansion built one slot at a time: each new slot couples the previous
/// tensor with a basis vector through a 3j symbol.
ExpandedDTensor build_recursive(const HarmonicSignature& sig, double prune_tol = kDefaultPruneTolerance);
/// Expansion from the closed product over slots. Shares no code with
/// build_recursive beyond the coupling tables.
ExpandedDTensor build_explicit(const HarmonicSignature& sig, double prune_tol = kDefaultPruneTolerance);

ComponentTensor evaluate(const ExpandedDTensor& x, const AnglePoint& p);
ComponentTensor evaluate(const HarmonicSignature& sig, const AnglePoint& p);
ComponentTensor evaluate(const HarmonicCombination& c, const AnglePoint& p);

/// conj(Y_sig) = phase * Y_sig' with sig' = sig with (m, n) -> (-m, -n).
std::pair<int, HarmonicSignature> conjugate_signature(const HarmonicSignature& sig);

/// Swaps tensor slots `slot` and `slot + 1` (0-based). Both slots must have
/// the same variance (VarianceMismatch otherwise).
HarmonicCombination transpose_adjacent(const HarmonicSignature& sig, int slot);
HarmonicCombination transpose_adjacent(const HarmonicCombination& c, int slot);

/// Adjacent transpositions (0-based left slot of each swap) that realize the
/// slot permutation `perm` (result slot s holds source slot perm[s]), found by
/// insertion order. Deterministic.
std::vector<int> adjacent_decomposition(std::span<const int> perm);

/// Applies the slot permutation `perm` (same semantics as
/// ComponentTensor::permuted) through adjacent transpositions.
HarmonicCombination permute(const HarmonicSignature& sig, std::span<const int> perm);
HarmonicCombination permute(const HarmonicCombination& c, std::span<const int> perm);

/// Contracts slots `slot` and `slot + 1` (0-based), which must have opposite
/// variances.
HarmonicCombination contract_adjacent(const HarmonicSignature& sig, int slot);
HarmonicCombination contract_adjacent(const HarmonicCombination& c, int slot);

/// Order in which contract_general brings two slots together.
enum class ContractionPath { first_moves_first, second_moves_first };

/// Contracts arbitrary slots a < b: slot a moves right across slots of its
/// own variance and slot b moves left across slots of its own variance until
/// they meet, then the adjacent contraction applies. Throws VarianceMismatch
/// when no such meeting point exists.
HarmonicCombination contract_general(const HarmonicSignature& sig, int slot_a, int slot_b,
                                     ContractionPath path = ContractionPath::first_moves_first);
HarmonicCombination contract_general(const HarmonicCombination& c, int slot_a, int slot_b,
                                     ContractionPath path = ContractionPath::first_moves_first);

/// Tensor product from the closed 3j formula; the slots of `a` come first.
HarmonicCombination tensor_product_closed(const HarmonicSignature& a, const HarmonicSignature& b,
                                          double prune_tol = kDefaultPruneTolerance);
HarmonicCombination tensor_product_closed(const HarmonicCombination& a, const HarmonicCombination& b,
                                          double prune_tol = kDefaultPruneTolerance);

struct Reprojection {
  HarmonicCombination combination;
  /// Largest coefficient of the input left unexplained by `combination`.
  double residual = 0.0;
};

/// Rewrites an expansion with arbitrary l0 as a combination of signatures by
/// matching (m0, mus) coefficients.
Reprojection reproject(const ExpandedDTensor& x, double prune_tol = kDefaultPruneTolerance);

/// Tensor product through the expansions: products of scalar harmonics are
/// expanded with product_expand, monomials concatenated, and the result
/// reprojected. Throws std::logic_error when the reprojection leaves a
/// residual above 1e-9.
HarmonicCombination tensor_product_oracle(const ExpandedDTensor& a, const ExpandedDTensor& b,
                                          double prune_tol = kDefaultPruneTolerance);

/// Full contraction of a rank-1 vector signature with a rank-1 covector
/// signature (either order), as a scalar expansion.
HarmonicExpansion scalar_product(const HarmonicSignature& a, const HarmonicSignature& b,
                                 double prune_tol = kDefaultPruneTolerance);

/// Components of the signature on every node of the grid (3^k components).
GridField sample_dtensor(const AngularGrid& grid, const HarmonicSignature& sig);

/// Smallest product rule that integrates the pairing of `a` and `b` exactly.
QuadratureSpec minimal_quadrature(const HarmonicSignature& a, const HarmonicSignature& b);

/// Integral of sum_a conj(A_{a1..ak}) B^{a1..ak} sin(theta) over the angles.
/// A and B must have equal rank and dual variances slot by slot
/// (VarianceMismatch otherwise); throws QuadratureOrderError when the rule is
/// too coarse.
std::complex<double> inner_product_integral(const HarmonicSignature& a, const HarmonicSignature& b,
                                            const QuadratureSpec& quad = {});

/// The same signature with every slot variance flipped.
HarmonicSignature dual_signature(const HarmonicSignature& sig);

namespace constants {
/// Kronecker delta: -sqrt(3) * Y(0|1,0; 0,0) with (vector, covector) slots.
HarmonicCombination kronecker();
/// Levi-Civita symbol: i sqrt(6) * Y(0|1,1,0; 0,0) with three covector slots.
HarmonicCombination epsilon();
}  // namespace constants

}  // namespace dharm
