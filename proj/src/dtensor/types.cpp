#include "dharm/dtensor.hpp"

#include "dharm/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

namespace dharm {

Variance dual(Variance v) { return v == Variance::vector ? Variance::covector : Variance::vector; }

std::string_view variance_name(Variance v) { return v == Variance::vector ? "vector" : "covector"; }

HarmonicSignature::HarmonicSignature(int l0_, std::vector<int> chain_, std::vector<Variance> variances_, int m_, int n_)
    : l0(l0_), chain(std::move(chain_)), variances(std::move(variances_)), m(m_), n(n_) {
  validate();
}

HarmonicSignature::HarmonicSignature(int l0_, std::vector<int> chain_, Variance variance, int m_, int n_)
    : l0(l0_), chain(std::move(chain_)), variances(chain.size(), variance), m(m_), n(n_) {
  validate();
}

void HarmonicSignature::validate() const {
  std::ostringstream os;
  if (l0 < 0) {
    os << "signature: l0 = " << l0 << " must be nonnegative";
    throw InvalidLabel(os.str());
  }
  if (variances.size() != chain.size()) {
    os << "signature: " << chain.size() << " chain entries but " << variances.size() << " slot variances";
    throw InvalidLabel(os.str());
  }
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const int prev = l(static_cast<int>(i));
    const int cur = chain[i];
    if (cur < std::abs(prev - 1) || cur > prev + 1) {
      os << "signature: l" << i + 1 << " = " << cur << " violates |l" << i << " - 1| <= l" << i + 1 << " <= l" << i
         << " + 1 (l" << i << " = " << prev << ")";
      throw InvalidLabel(os.str());
    }
  }
  if (std::abs(m) > top_l()) {
    os << "signature: |m| = " << std::abs(m) << " exceeds l" << chain.size() << " = " << top_l();
    throw InvalidLabel(os.str());
  }
  if (std::abs(n) > l0) {
    os << "signature: |n| = " << std::abs(n) << " exceeds l0 = " << l0;
    throw InvalidLabel(os.str());
  }
}

std::string HarmonicSignature::to_string() const {
  std::ostringstream os;
  os << l0 << '|';
  for (std::size_t i = 0; i < chain.size(); ++i) os << (i ? "," : "") << chain[i];
  os << ';' << m << ',' << n << ';';
  for (std::size_t i = 0; i < variances.size(); ++i) os << (i ? "," : "") << (variances[i] == Variance::vector ? 'v' : 'c');
  return os.str();
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

int parse_int(std::string_view token, std::string_view text, const char* what) {
  int value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (!token.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc() || ptr != last)
    throw InvalidLabel("signature \"" + std::string(text) + "\": " + what + " \"" + std::string(token) + "\" is not an integer");
  return value;
}

}  // namespace

HarmonicSignature HarmonicSignature::parse(std::string_view text) {
  const auto sections = split(text, ';');
  if (sections.size() < 2 || sections.size() > 3)
    throw InvalidLabel("signature \"" + std::string(text) + "\": expected \"l0|l1,...,lk;m,n;v,c,...\"");
  const auto head = split(sections[0], '|');
  if (head.size() != 2) throw InvalidLabel("signature \"" + std::string(text) + "\": missing '|' after l0");
  const int l0 = parse_int(head[0], text, "l0");
  std::vector<int> chain;
  if (!head[1].empty())
    for (auto tok : split(head[1], ',')) chain.push_back(parse_int(tok, text, "chain entry"));
  const auto mn = split(sections[1], ',');
  if (mn.size() != 2) throw InvalidLabel("signature \"" + std::string(text) + "\": expected \"m,n\"");
  const int m = parse_int(mn[0], text, "m");
  const int n = parse_int(mn[1], text, "n");
  std::vector<Variance> variances;
  if (sections.size() == 3 && !sections[2].empty()) {
    for (auto tok : split(sections[2], ',')) {
      if (tok == "v" || tok == "vector")
        variances.push_back(Variance::vector);
      else if (tok == "c" || tok == "covector")
        variances.push_back(Variance::covector);
      else
        throw InvalidLabel("signature \"" + std::string(text) + "\": variance \"" + std::string(tok) +
                           "\" is neither v nor c");
    }
  }
  return HarmonicSignature(l0, std::move(chain), std::move(variances), m, n);
}

ExpandedDTensor& ExpandedDTensor::prune(double tol) {
  std::erase_if(terms, [tol](const auto& kv) { return std::abs(kv.second) <= tol; });
  return *this;
}

HarmonicCombination HarmonicCombination::single(const HarmonicSignature& sig, std::complex<double> coefficient) {
  HarmonicCombination out(sig.variances);
  out.add(sig, coefficient);
  return out;
}

void HarmonicCombination::add(const HarmonicSignature& sig, std::complex<double> coefficient) {
  if (terms_.empty() && variances_.empty()) variances_ = sig.variances;
  if (sig.variances != variances_)
    throw VarianceMismatch("combination: signature " + sig.to_string() + " does not match the combination's variances");
  terms_[sig] += coefficient;
}

void HarmonicCombination::add(const HarmonicCombination& other, std::complex<double> scale) {
  if (terms_.empty() && variances_.empty()) variances_ = other.variances_;
  if (other.variances_ != variances_ && !other.empty())
    throw VarianceMismatch("combination: adding a combination with different variances");
  for (const auto& [sig, c] : other.terms_) terms_[sig] += scale * c;
}

HarmonicCombination& HarmonicCombination::prune(double tol) {
  std::erase_if(terms_, [tol](const auto& kv) { return std::abs(kv.second) <= tol; });
  return *this;
}

std::complex<double> HarmonicCombination::coefficient(const HarmonicSignature& sig) const {
  const auto it = terms_.find(sig);
  return it == terms_.end() ? std::complex<double>{} : it->second;
}

double HarmonicCombination::max_abs_diff(const HarmonicCombination& a, const HarmonicCombination& b) {
  double out = 0.0;
  for (const auto& [sig, c] : a.terms_) out = std::max(out, std::abs(c - b.coefficient(sig)));
  for (const auto& [sig, c] : b.terms_)
    if (!a.terms_.contains(sig)) out = std::max(out, std::abs(c));
  return out;
}

namespace {

std::size_t power_of_three(int k) {
  std::size_t out = 1;
  for (int i = 0; i < k; ++i) out *= 3;
  return out;
}

void check_slot(int slot, int rank, const char* what) {
  if (slot < 0 || slot >= rank)
    throw std::out_of_range(std::string(what) + ": slot " + std::to_string(slot) + " out of range for rank " +
                            std::to_string(rank));
}

}  // namespace

ComponentTensor::ComponentTensor(std::vector<Variance> variances)
    : variances_(std::move(variances)), data_(power_of_three(static_cast<int>(variances_.size())), 0.0) {}

std::complex<double>& ComponentTensor::at(std::span<const int> index) {
  return const_cast<std::complex<double>&>(std::as_const(*this).at(index));
}

const std::complex<double>& ComponentTensor::at(std::span<const int> index) const {
  if (static_cast<int>(index.size()) != rank()) throw std::out_of_range("ComponentTensor::at: wrong number of indices");
  std::size_t flat = 0;
  for (int a : index) {
    if (a < 0 || a > 2) throw std::out_of_range("ComponentTensor::at: index outside 0..2");
    flat = flat * 3 + static_cast<std::size_t>(a);
  }
  return data_[flat];
}

ComponentTensor& ComponentTensor::operator+=(const ComponentTensor& other) {
  if (other.rank() != rank()) throw std::invalid_argument("ComponentTensor: rank mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

ComponentTensor& ComponentTensor::operator-=(const ComponentTensor& other) {
  if (other.rank() != rank()) throw std::invalid_argument("ComponentTensor: rank mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

ComponentTensor& ComponentTensor::operator*=(std::complex<double> s) {
  for (auto& v : data_) v *= s;
  return *this;
}

ComponentTensor ComponentTensor::conj() const {
  ComponentTensor out = *this;
  for (auto& v : out.data_) v = std::conj(v);
  return out;
}

double ComponentTensor::max_abs() const {
  double out = 0.0;
  for (const auto& v : data_) out = std::max(out, std::abs(v));
  return out;
}

double ComponentTensor::max_abs_diff(const ComponentTensor& a, const ComponentTensor& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("ComponentTensor::max_abs_diff: rank mismatch");
  double out = 0.0;
  for (std::size_t i = 0; i < a.data_.size(); ++i) out = std::max(out, std::abs(a.data_[i] - b.data_[i]));
  return out;
}

ComponentTensor ComponentTensor::permuted(std::span<const int> perm) const {
  const int k = rank();
  if (static_cast<int>(perm.size()) != k) throw std::invalid_argument("ComponentTensor::permuted: wrong length");
  std::vector<bool> seen(k, false);
  for (int p : perm) {
    check_slot(p, k, "ComponentTensor::permuted");
    if (seen[p]) throw std::invalid_argument("ComponentTensor::permuted: not a permutation");
    seen[p] = true;
  }
  std::vector<Variance> vars(k);
  for (int s = 0; s < k; ++s) vars[s] = variances_[perm[s]];
  ComponentTensor out(std::move(vars));
  std::vector<int> dst(k), src(k);
  for (std::size_t flat = 0; flat < data_.size(); ++flat) {
    std::size_t rest = flat;
    for (int s = k - 1; s >= 0; --s) {
      dst[s] = static_cast<int>(rest % 3);
      rest /= 3;
    }
    for (int s = 0; s < k; ++s) src[perm[s]] = dst[s];
    out.data_[flat] = at(src);
  }
  return out;
}

ComponentTensor ComponentTensor::swapped(int slot_a, int slot_b) const {
  check_slot(slot_a, rank(), "ComponentTensor::swapped");
  check_slot(slot_b, rank(), "ComponentTensor::swapped");
  std::vector<int> perm(rank());
  for (int s = 0; s < rank(); ++s) perm[s] = s;
  std::swap(perm[slot_a], perm[slot_b]);
  return permuted(perm);
}

ComponentTensor ComponentTensor::traced(int slot_a, int slot_b) const {
  check_slot(slot_a, rank(), "ComponentTensor::traced");
  check_slot(slot_b, rank(), "ComponentTensor::traced");
  if (slot_a == slot_b) throw std::invalid_argument("ComponentTensor::traced: slots must differ");
  const int k = rank();
  std::vector<Variance> vars;
  for (int s = 0; s < k; ++s)
    if (s != slot_a && s != slot_b) vars.push_back(variances_[s]);
  ComponentTensor out(std::move(vars));
  std::vector<int> dst(k - 2), src(k);
  for (std::size_t flat = 0; flat < out.data_.size(); ++flat) {
    std::size_t rest = flat;
    for (int s = k - 3; s >= 0; --s) {
      dst[s] = static_cast<int>(rest % 3);
      rest /= 3;
    }
    std::complex<double> sum = 0.0;
    for (int a = 0; a < 3; ++a) {
      int d = 0;
      for (int s = 0; s < k; ++s) src[s] = (s == slot_a || s == slot_b) ? a : dst[d++];
      sum += at(src);
    }
    out.data_[flat] = sum;
  }
  return out;
}

ComponentTensor ComponentTensor::outer(const ComponentTensor& a, const ComponentTensor& b) {
  std::vector<Variance> vars = a.variances_;
  vars.insert(vars.end(), b.variances_.begin(), b.variances_.end());
  ComponentTensor out(std::move(vars));
  for (std::size_t i = 0; i < a.data_.size(); ++i)
    for (std::size_t j = 0; j < b.data_.size(); ++j) out.data_[i * b.data_.size() + j] = a.data_[i] * b.data_[j];
  return out;
}

ComponentTensor ComponentTensor::with_variances(std::vector<Variance> variances) const {
  if (static_cast<int>(variances.size()) != rank()) throw std::invalid_argument("ComponentTensor::with_variances: rank mismatch");
  ComponentTensor out = *this;
  out.variances_ = std::move(variances);
  return out;
}

}  // namespace dharm
