#pragma once

#include "dharm/scalar_harmonics.hpp"

#include <compare>
#include <complex>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dharm {

enum class Variance { vector, covector };

Variance dual(Variance v);
std::string_view variance_name(Variance v);

/// Label (l0 | l1, ..., lk; m, n) of a spherical harmonic d-tensor of rank k,
/// plus the variance of each slot.
///
/// Index conditions: each l_i lies in |l_{i-1} - 1| .. l_{i-1} + 1 (which
/// excludes l_{i-1} = l_i = 0), |m| <= l_k and |n| <= l0, where l_k = l0
/// for k = 0.
struct HarmonicSignature {
  int l0 = 0;
  std::vector<int> chain;
  std::vector<Variance> variances;
  int m = 0;
  int n = 0;

  HarmonicSignature() = default;
  /// Throws InvalidLabel naming the violated condition.
  HarmonicSignature(int l0, std::vector<int> chain, std::vector<Variance> variances, int m, int n);
  /// Rank-k signature with every slot of the same variance.
  HarmonicSignature(int l0, std::vector<int> chain, Variance variance, int m, int n);

  /// Throws InvalidLabel naming the violated condition.
  void validate() const;

  int rank() const { return static_cast<int>(chain.size()); }
  /// l_k, the rotation weight of the tensor.
  int top_l() const { return chain.empty() ? l0 : chain.back(); }
  /// l_i for i = 0..k.
  int l(int i) const { return i == 0 ? l0 : chain.at(i - 1); }

  /// Grammar: "l0|l1,...,lk;m,n;v,c,..." with v = vector, c = covector.
  /// Rank 0 is written "l0|;m,n;" (the trailing variance section may be
  /// omitted when parsing).
  std::string to_string() const;
  /// Throws InvalidLabel on syntax errors or violated index conditions.
  static HarmonicSignature parse(std::string_view text);

  friend auto operator<=>(const HarmonicSignature&, const HarmonicSignature&) = default;
};

/// Sparse expansion of a harmonic d-tensor as
/// sum coefficient * Y_{l0, m0, n} * e_{mu_1} (x) ... (x) e_{mu_k},
/// with e^mu in place of e_mu on covector slots.
struct ExpandedDTensor {
  struct Key {
    int m0 = 0;
    std::vector<int> mus;
    friend auto operator<=>(const Key&, const Key&) = default;
  };

  int l0 = 0;
  int n = 0;
  std::vector<Variance> variances;
  std::map<Key, std::complex<double>> terms;

  int rank() const { return static_cast<int>(variances.size()); }
  ExpandedDTensor& prune(double tol = kDefaultPruneTolerance);
};

/// Sparse complex-weighted sum of signatures sharing one rank and variance list.
class HarmonicCombination {
 public:
  using Terms = std::map<HarmonicSignature, std::complex<double>>;

  HarmonicCombination() = default;
  explicit HarmonicCombination(std::vector<Variance> variances) : variances_(std::move(variances)) {}
  static HarmonicCombination single(const HarmonicSignature& sig, std::complex<double> coefficient = 1.0);

  /// Throws VarianceMismatch when the signature's variances differ from the
  /// combination's (the first add fixes them for a default-constructed one).
  void add(const HarmonicSignature& sig, std::complex<double> coefficient);
  void add(const HarmonicCombination& other, std::complex<double> scale = 1.0);
  HarmonicCombination& prune(double tol = kDefaultPruneTolerance);

  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Variance>& variances() const { return variances_; }
  int rank() const { return static_cast<int>(variances_.size()); }
  std::complex<double> coefficient(const HarmonicSignature& sig) const;

  /// Largest coefficient difference over the union of both supports.
  static double max_abs_diff(const HarmonicCombination& a, const HarmonicCombination& b);

 private:
  std::vector<Variance> variances_;
  Terms terms_;
};

/// Dense components of a rank-k tensor in the Cartesian basis; slot 0 is the
/// most significant index of the flat layout and indices run over 0, 1, 2.
class ComponentTensor {
 public:
  ComponentTensor() : data_(1, 0.0) {}
  explicit ComponentTensor(std::vector<Variance> variances);

  int rank() const { return static_cast<int>(variances_.size()); }
  const std::vector<Variance>& variances() const { return variances_; }
  std::size_t size() const { return data_.size(); }

  std::complex<double>& operator[](std::size_t flat) { return data_[flat]; }
  const std::complex<double>& operator[](std::size_t flat) const { return data_[flat]; }
  std::complex<double>& at(std::span<const int> index);
  const std::complex<double>& at(std::span<const int> index) const;
  std::complex<double>& at(std::initializer_list<int> index) { return at(std::span<const int>(index.begin(), index.size())); }
  const std::complex<double>& at(std::initializer_list<int> index) const {
    return at(std::span<const int>(index.begin(), index.size()));
  }

  std::span<const std::complex<double>> data() const { return data_; }
  std::span<std::complex<double>> data() { return data_; }

  /// Componentwise arithmetic requires equal rank; variances are not compared.
  ComponentTensor& operator+=(const ComponentTensor& other);
  ComponentTensor& operator-=(const ComponentTensor& other);
  ComponentTensor& operator*=(std::complex<double> s);
  friend ComponentTensor operator+(ComponentTensor a, const ComponentTensor& b) { return a += b; }
  friend ComponentTensor operator-(ComponentTensor a, const ComponentTensor& b) { return a -= b; }
  friend ComponentTensor operator*(std::complex<double> s, ComponentTensor a) { return a *= s; }

  ComponentTensor conj() const;
  double max_abs() const;
  static double max_abs_diff(const ComponentTensor& a, const ComponentTensor& b);

  /// Result slot s holds source slot perm[s].
  ComponentTensor permuted(std::span<const int> perm) const;
  ComponentTensor swapped(int slot_a, int slot_b) const;
  /// Sums over equal indices of two slots, removing both.
  ComponentTensor traced(int slot_a, int slot_b) const;
  static ComponentTensor outer(const ComponentTensor& a, const ComponentTensor& b);
  /// The same components with a different variance list (same rank).
  ComponentTensor with_variances(std::vector<Variance> variances) const;

 private:
  std::vector<Variance> variances_;
  std::vector<std::complex<double>> data_;
};

}  // namespace dharm
