#include "dharm/kernels.hpp"

#include "reduce.hpp"

#include <immintrin.h>

namespace dharm::kernels::avx2 {

namespace {

double horizontal_sum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

}  // namespace

std::complex<double> weighted_conj_dot(std::span<const double> w, std::span<const double> a_re,
                                       std::span<const double> a_im, std::span<const double> b_re,
                                       std::span<const double> b_im) {
  detail::require_same_length(w.size(), a_re, a_im, b_re, b_im);
  return detail::blocked_pairwise(w.size(), kReductionBlock, [&](std::size_t lo, std::size_t hi) {
    __m256d acc_re = _mm256_setzero_pd();
    __m256d acc_im = _mm256_setzero_pd();
    std::size_t i = lo;
    for (; i + 4 <= hi; i += 4) {
      const __m256d wv = _mm256_loadu_pd(&w[i]);
      const __m256d ar = _mm256_loadu_pd(&a_re[i]);
      const __m256d ai = _mm256_loadu_pd(&a_im[i]);
      const __m256d br = _mm256_loadu_pd(&b_re[i]);
      const __m256d bi = _mm256_loadu_pd(&b_im[i]);
      const __m256d re = _mm256_fmadd_pd(ar, br, _mm256_mul_pd(ai, bi));
      const __m256d im = _mm256_fmsub_pd(ar, bi, _mm256_mul_pd(ai, br));
      acc_re = _mm256_fmadd_pd(wv, re, acc_re);
      acc_im = _mm256_fmadd_pd(wv, im, acc_im);
    }
    double re = horizontal_sum(acc_re);
    double im = horizontal_sum(acc_im);
    for (; i < hi; ++i) {
      re += w[i] * (a_re[i] * b_re[i] + a_im[i] * b_im[i]);
      im += w[i] * (a_re[i] * b_im[i] - a_im[i] * b_re[i]);
    }
    return std::complex<double>(re, im);
  });
}

void complex_axpy(std::complex<double> c, std::span<const double> x_re, std::span<const double> x_im,
                  std::span<double> y_re, std::span<double> y_im) {
  detail::require_same_length(x_re.size(), x_im, y_re, y_im);
  const __m256d cr = _mm256_set1_pd(c.real());
  const __m256d ci = _mm256_set1_pd(c.imag());
  const std::size_t n = x_re.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d xr = _mm256_loadu_pd(&x_re[i]);
    const __m256d xi = _mm256_loadu_pd(&x_im[i]);
    __m256d yr = _mm256_loadu_pd(&y_re[i]);
    __m256d yi = _mm256_loadu_pd(&y_im[i]);
    yr = _mm256_add_pd(yr, _mm256_fmsub_pd(cr, xr, _mm256_mul_pd(ci, xi)));
    yi = _mm256_add_pd(yi, _mm256_fmadd_pd(cr, xi, _mm256_mul_pd(ci, xr)));
    _mm256_storeu_pd(&y_re[i], yr);
    _mm256_storeu_pd(&y_im[i], yi);
  }
  for (; i < n; ++i) {
    y_re[i] += c.real() * x_re[i] - c.imag() * x_im[i];
    y_im[i] += c.real() * x_im[i] + c.imag() * x_re[i];
  }
}

}  // namespace dharm::kernels::avx2
