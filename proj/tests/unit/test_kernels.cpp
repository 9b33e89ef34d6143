#include "dharm/kernels.hpp"
#include "dharm/quadrature.hpp"
#include "dharm/scalar_harmonics.hpp"

#include <doctest.h>

#include <random>
#include <vector>

using namespace dharm;
namespace k = dharm::kernels;

namespace {

struct Data {
  std::vector<double> w, ar, ai, br, bi;
};

Data random_samples(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Data d;
  for (auto* v : {&d.w, &d.ar, &d.ai, &d.br, &d.bi}) {
    v->resize(n);
    for (auto& x : *v) x = u(rng);
  }
  return d;
}

}  // namespace

TEST_CASE("scalar kernels against a naive loop") {
  const Data d = random_samples(1000, 1);
  std::complex<double> naive = 0.0;
  for (std::size_t i = 0; i < d.w.size(); ++i)
    naive += d.w[i] * std::conj(std::complex<double>(d.ar[i], d.ai[i])) * std::complex<double>(d.br[i], d.bi[i]);
  const auto got = k::scalar::weighted_conj_dot(d.w, d.ar, d.ai, d.br, d.bi);
  CHECK(std::abs(got - naive) < 1e-12);
}

TEST_CASE("AVX2 kernels are equivalent to the scalar reference") {
  if (!k::isa_supported(k::Isa::avx2)) {
    MESSAGE("AVX2 not available; equivalence not exercised");
    CHECK_THROWS(k::set_active_isa(k::Isa::avx2));
    return;
  }
  for (const std::size_t n : {0u, 1u, 3u, 4u, 7u, 511u, 512u, 513u, 1029u, 5000u}) {
    const Data d = random_samples(n, static_cast<unsigned>(n) + 7);
    const auto s = k::scalar::weighted_conj_dot(d.w, d.ar, d.ai, d.br, d.bi);
    const auto v = k::avx2::weighted_conj_dot(d.w, d.ar, d.ai, d.br, d.bi);
    CHECK(std::abs(s - v) <= 1e-13 * std::max<double>(1.0, static_cast<double>(n)));

    std::vector<double> ys_re = d.br, ys_im = d.bi, yv_re = d.br, yv_im = d.bi;
    const std::complex<double> c(0.3, -1.7);
    k::scalar::complex_axpy(c, d.ar, d.ai, ys_re, ys_im);
    k::avx2::complex_axpy(c, d.ar, d.ai, yv_re, yv_im);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(std::abs(ys_re[i] - yv_re[i]) < 1e-15);
      CHECK(std::abs(ys_im[i] - yv_im[i]) < 1e-15);
    }
  }
}

TEST_CASE("dispatch switches ISA and both give the same orthogonality integral") {
  const k::Isa before = k::active_isa();
  const AngularTriple t(3, 1, -2);
  k::set_active_isa(k::Isa::scalar);
  CHECK(k::active_isa() == k::Isa::scalar);
  const auto s = orthogonality_integral(t, t);
  if (k::isa_supported(k::Isa::avx2)) {
    k::set_active_isa(k::Isa::avx2);
    const auto v = orthogonality_integral(t, t);
    CHECK(std::abs(s - v) < 1e-12);
  }
  k::set_active_isa(before);
  CHECK(k::isa_name(k::Isa::avx2) == "avx2");
}

TEST_CASE("mismatched spans are rejected") {
  const Data d = random_samples(8, 3);
  const std::vector<double> shorter(7, 0.0);
  CHECK_THROWS_AS(k::weighted_conj_dot(d.w, d.ar, d.ai, d.br, shorter), std::invalid_argument);
}
