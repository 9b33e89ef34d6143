#include "dharm/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace dharm::kernels {

#ifndef DHARM_HAVE_AVX2
namespace avx2 {
std::complex<double> weighted_conj_dot(std::span<const double>, std::span<const double>, std::span<const double>,
                                       std::span<const double>, std::span<const double>) {
  throw std::logic_error("AVX2 kernels were not built");
}
void complex_axpy(std::complex<double>, std::span<const double>, std::span<const double>, std::span<double>,
                  std::span<double>) {
  throw std::logic_error("AVX2 kernels were not built");
}
}  // namespace avx2
#endif

namespace {

Isa detect() {
  if (const char* env = std::getenv("DHARM_KERNEL_ISA"); env && std::string(env) == "scalar") return Isa::scalar;
  return isa_supported(Isa::avx2) ? Isa::avx2 : Isa::scalar;
}

std::atomic<Isa>& active() {
  static std::atomic<Isa> isa{detect()};
  return isa;
}

}  // namespace

std::string_view isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

bool isa_supported(Isa isa) {
  if (isa == Isa::scalar) return true;
#if defined(DHARM_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  static const bool ok = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return ok;
#else
  return false;
#endif
}

Isa active_isa() { return active().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  if (!isa_supported(isa)) throw std::invalid_argument("kernel ISA not supported: " + std::string(isa_name(isa)));
  active().store(isa, std::memory_order_relaxed);
}

std::complex<double> weighted_conj_dot(std::span<const double> w, std::span<const double> a_re,
                                       std::span<const double> a_im, std::span<const double> b_re,
                                       std::span<const double> b_im) {
  const std::size_t n = w.size();
  if (a_re.size() != n || a_im.size() != n || b_re.size() != n || b_im.size() != n)
    throw std::invalid_argument("weighted_conj_dot: span lengths differ");
  if (active_isa() == Isa::avx2) return avx2::weighted_conj_dot(w, a_re, a_im, b_re, b_im);
  return scalar::weighted_conj_dot(w, a_re, a_im, b_re, b_im);
}

void complex_axpy(std::complex<double> c, std::span<const double> x_re, std::span<const double> x_im,
                  std::span<double> y_re, std::span<double> y_im) {
  const std::size_t n = x_re.size();
  if (x_im.size() != n || y_re.size() != n || y_im.size() != n)
    throw std::invalid_argument("complex_axpy: span lengths differ");
  if (active_isa() == Isa::avx2) return avx2::complex_axpy(c, x_re, x_im, y_re, y_im);
  scalar::complex_axpy(c, x_re, x_im, y_re, y_im);
}

}  // namespace dharm::kernels
