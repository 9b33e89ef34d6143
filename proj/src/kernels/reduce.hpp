#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace dharm::kernels::detail {

inline std::complex<double> pairwise_sum(const std::vector<std::complex<double>>& parts, std::size_t lo,
                                         std::size_t hi) {
  if (hi - lo == 1) return parts[lo];
  const std::size_t mid = lo + (hi - lo) / 2;
  return pairwise_sum(parts, lo, mid) + pairwise_sum(parts, mid, hi);
}

/// Splits [0, n) into reduction blocks, sums each block with `block_sum` and
/// combines the block sums as a balanced tree.
template <class BlockSum>
std::complex<double> blocked_pairwise(std::size_t n, std::size_t block, BlockSum&& block_sum) {
  if (n == 0) return {};
  std::vector<std::complex<double>> parts;
  parts.reserve((n + block - 1) / block);
  for (std::size_t begin = 0; begin < n; begin += block) parts.push_back(block_sum(begin, std::min(n, begin + block)));
  return pairwise_sum(parts, 0, parts.size());
}

template <class... Spans>
void require_same_length(std::size_t n, const Spans&... spans) {
  if (((spans.size() != n) || ...)) throw std::invalid_argument("kernel: span lengths differ");
}

}  // namespace dharm::kernels::detail
