#pragma once

#include <complex>
#include <span>
#include <string_view>

// Data-parallel inner loops of the quadrature code. Every kernel has a scalar
// reference implementation and, on x86-64, an AVX2+FMA variant picked at
// runtime. Complex arrays are passed split (real and imaginary parts).
namespace dharm::kernels {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa);
bool isa_supported(Isa isa);

/// Kernel set used by the dispatching entry points. Defaults to the best
/// supported ISA, unless DHARM_KERNEL_ISA=scalar is set in the environment.
Isa active_isa();
/// Throws std::invalid_argument when the ISA is not supported here.
void set_active_isa(Isa isa);

/// Block length of the pairwise reduction. Sums inside a block run in the
/// kernel's lane order; block sums are combined as a balanced tree, so a
/// result is reproducible for a fixed ISA.
inline constexpr std::size_t kReductionBlock = 512;

/// sum_i w[i] * conj(a[i]) * b[i]. All spans must have equal length.
std::complex<double> weighted_conj_dot(std::span<const double> w, std::span<const double> a_re,
                                       std::span<const double> a_im, std::span<const double> b_re,
                                       std::span<const double> b_im);

/// y[i] += c * x[i].
void complex_axpy(std::complex<double> c, std::span<const double> x_re, std::span<const double> x_im,
                  std::span<double> y_re, std::span<double> y_im);

namespace scalar {
std::complex<double> weighted_conj_dot(std::span<const double> w, std::span<const double> a_re,
                                       std::span<const double> a_im, std::span<const double> b_re,
                                       std::span<const double> b_im);
void complex_axpy(std::complex<double> c, std::span<const double> x_re, std::span<const double> x_im,
                  std::span<double> y_re, std::span<double> y_im);
}  // namespace scalar

namespace avx2 {
// Only callable when isa_supported(Isa::avx2); otherwise they throw.
std::complex<double> weighted_conj_dot(std::span<const double> w, std::span<const double> a_re,
                                       std::span<const double> a_im, std::span<const double> b_re,
                                       std::span<const double> b_im);
void complex_axpy(std::complex<double> c, std::span<const double> x_re, std::span<const double> x_im,
                  std::span<double> y_re, std::span<double> y_im);
}  // namespace avx2

}  // namespace dharm::kernels
