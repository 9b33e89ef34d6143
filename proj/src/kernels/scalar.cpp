#include "dharm/kernels.hpp"

#include "reduce.hpp"

namespace dharm::kernels::scalar {

std::complex<double> weighted_conj_dot(std::span<const double> w, std::span<const double> a_re,
                                       std::span<const double> a_im, std::span<const double> b_re,
                                       std::span<const double> b_im) {
  detail::require_same_length(w.size(), a_re, a_im, b_re, b_im);
  return detail::blocked_pairwise(w.size(), kReductionBlock, [&](std::size_t lo, std::size_t hi) {
    double re = 0.0;
    double im = 0.0;
    for (std::size_t i = lo; i < hi; ++i) {
      // conj(a) * b = (ar br + ai bi) + i (ar bi - ai br)
      re += w[i] * (a_re[i] * b_re[i] + a_im[i] * b_im[i]);
      im += w[i] * (a_re[i] * b_im[i] - a_im[i] * b_re[i]);
    }
    return std::complex<double>(re, im);
  });
}

void complex_axpy(std::complex<double> c, std::span<const double> x_re, std::span<const double> x_im,
                  std::span<double> y_re, std::span<double> y_im) {
  detail::require_same_length(x_re.size(), x_im, y_re, y_im);
  const double cr = c.real();
  const double ci = c.imag();
  for (std::size_t i = 0; i < x_re.size(); ++i) {
    y_re[i] += cr * x_re[i] - ci * x_im[i];
    y_im[i] += cr * x_im[i] + ci * x_re[i];
  }
}

}  // namespace dharm::kernels::scalar
