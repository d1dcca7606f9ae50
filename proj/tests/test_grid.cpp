#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hardyline/descriptors.hpp"
#include "hardyline/grid.hpp"
#include "hardyline/rng.hpp"

using namespace hardyline;

namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrt2Pi = std::sqrt(2.0 * kPi);

double max_abs_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  REQUIRE(a.size() == b.size());
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

SampledFunction random_function(const GridSpec& g, std::uint64_t seed) {
  Rng rng(seed);
  SampledFunction f = make_function(g);
  for (cplx& v : f.values) v = rng.next_complex_normal();
  return f;
}

}  // namespace

TEST_CASE("grid layout and spacings") {
  const GridSpec g = make_grid(4.0, 8);
  CHECK(g.dx == doctest::Approx(1.0));
  CHECK(g.dxi == doctest::Approx(kPi / 4.0));
  CHECK(g.x(0) == doctest::Approx(-4.0));
  CHECK(g.x(7) == doctest::Approx(3.0));
  CHECK(g.min_bin() == -4);
  CHECK(g.max_bin() == 3);
  CHECK(g.bin_index(-4) == 0);
  CHECK(g.bin_index(0) == 4);
  CHECK(g.bin_of_index(7) == 3);
  // dx * dxi = 2 pi / N exactly ties the two grids together.
  CHECK(g.dx * g.dxi == doctest::Approx(2.0 * kPi / 8.0).epsilon(1e-15));
}

TEST_CASE("make_grid rejects bad parameters") {
  CHECK_THROWS_AS(make_grid(0.0, 64), Error);
  CHECK_THROWS_AS(make_grid(-2.0, 64), Error);
  CHECK_THROWS_AS(make_grid(4.0, 6), Error);
  CHECK_THROWS_AS(make_grid(4.0, 4), Error);
  CHECK_THROWS_AS(make_grid(4.0, 4095), Error);
  try {
    make_grid(4.0, 4095);
  } catch (const Error& e) {
    CHECK(e.code() == errc::invalid_parameter);
  }
}

TEST_CASE("pure tone lands on a single bin with mass 2L/sqrt(2 pi)") {
  const GridSpec g = make_grid(16.0, 256);
  for (long long s : {1LL, 5LL, -9LL, 40LL}) {
    const SampledFunction f = synthesize(tone_descriptor_bins(s), g);
    const SpectralFunction F = forward_fourier(f);
    const double expect = 2.0 * g.L / kSqrt2Pi;
    CHECK(std::abs(F.coeffs[g.bin_index(s)] - expect) < 1e-10 * expect);
    double off = 0.0;
    for (std::size_t i = 0; i < F.coeffs.size(); ++i)
      if (i != g.bin_index(s)) off = std::max(off, std::abs(F.coeffs[i]));
    CHECK(off < 1e-10 * expect);
  }
}

TEST_CASE("standard gaussian is self-dual under the unitary normalization") {
  const GridSpec g = make_grid(64.0, 4096);
  FunctionDescriptor d;
  d.kind = FunctionDescriptor::Kind::gaussian_space;
  d.center = 0.0;
  d.width = 1.0;
  const SpectralFunction F = forward_fourier(synthesize(d, g));
  for (long long k = -200; k <= 200; ++k) {
    const double expect = std::exp(-0.5 * g.xi(k) * g.xi(k));
    CHECK(std::abs(F.coeffs[g.bin_index(k)] - expect) < 1e-8);
  }
}

TEST_CASE("forward/inverse roundtrip is exact to 1e-12") {
  const GridSpec g = make_grid(32.0, 1024);
  const SampledFunction f = random_function(g, 11);
  const SampledFunction back = inverse_fourier(forward_fourier(f));
  CHECK(max_abs_diff(f.values, back.values) < 1e-12);
}

TEST_CASE("Plancherel: spectral l2 equals sample l2") {
  const GridSpec g = make_grid(32.0, 1024);
  const SampledFunction f = random_function(g, 12);
  double sample_sq = 0.0;
  for (const cplx& v : f.values) sample_sq += std::norm(v);
  sample_sq *= g.dx;
  const double spec = spectral_l2(forward_fourier(f));
  CHECK(spec * spec == doctest::Approx(sample_sq).epsilon(1e-12));
}

TEST_CASE("fft matches the direct O(n^2) transform") {
  for (std::size_t n : {64u, 256u, 512u}) {
    Rng rng(77 + n);
    std::vector<cplx> a(n);
    for (cplx& v : a) v = rng.next_complex_normal();
    for (int sign : {-1, +1}) {
      std::vector<cplx> fast = a;
      fft_pow2(fast, sign);
      const std::vector<cplx> slow = dft_direct(a, sign);
      double scale = 0.0;
      for (const cplx& v : slow) scale = std::max(scale, std::abs(v));
      CHECK(max_abs_diff(fast, slow) < 1e-10 * scale);
    }
  }
}

TEST_CASE("forward_fourier matches direct quadrature of the integral") {
  const GridSpec g = make_grid(8.0, 64);
  const SampledFunction f = random_function(g, 13);
  const SpectralFunction F = forward_fourier(f);
  for (long long k = g.min_bin(); k <= g.max_bin(); ++k) {
    cplx sum = 0.0;
    for (std::size_t j = 0; j < g.N; ++j)
      sum += f.values[j] * std::exp(cplx(0.0, -g.x(j) * g.xi(k)));
    sum *= g.dx / kSqrt2Pi;
    CHECK(std::abs(F.coeffs[g.bin_index(k)] - sum) < 1e-10);
  }
}

TEST_CASE("l1 norm: values, homogeneity, triangle inequality") {
  const GridSpec g = make_grid(64.0, 4096);
  FunctionDescriptor haar;
  haar.kind = FunctionDescriptor::Kind::haar_profile;
  haar.a = 0.0;
  haar.b = 1.0;
  const SampledFunction h = synthesize(haar, g);
  CHECK(l1_norm(h) == doctest::Approx(1.0).epsilon(1e-12));

  SampledFunction f = random_function(g, 14);
  SampledFunction sf = f;
  for (cplx& v : sf.values) v *= cplx(3.0, -4.0);
  CHECK(l1_norm(sf) == doctest::Approx(5.0 * l1_norm(f)).epsilon(1e-12));

  const SampledFunction g2 = random_function(g, 15);
  SampledFunction sum = f;
  for (std::size_t j = 0; j < g.N; ++j) sum.values[j] += g2.values[j];
  CHECK(l1_norm(sum) <= l1_norm(f) + l1_norm(g2) + 1e-12);
}

TEST_CASE("pairing: tone orthogonality and grid mismatch") {
  const GridSpec g = make_grid(16.0, 256);
  const SampledFunction t3 = synthesize(tone_descriptor_bins(3), g);
  const SampledFunction t5 = synthesize(tone_descriptor_bins(5), g);
  CHECK(std::abs(pairing(t3, t5)) < 1e-12 * 2.0 * g.L);
  CHECK(std::abs(pairing(t3, t3) - 2.0 * g.L) < 1e-12 * 2.0 * g.L);

  const SampledFunction other = make_function(make_grid(16.0, 512));
  CHECK_THROWS_AS((void)pairing(t3, other), Error);
}

TEST_CASE("random_band synthesis is bitwise deterministic") {
  const GridSpec g = make_grid(64.0, 4096);
  FunctionDescriptor d;
  d.kind = FunctionDescriptor::Kind::random_band;
  d.lo = 3;
  d.hi = 90;
  d.seed = 1234;
  const SampledFunction f1 = synthesize(d, g);
  const SampledFunction f2 = synthesize(d, g);
  for (std::size_t j = 0; j < g.N; ++j) {
    CHECK(f1.values[j].real() == f2.values[j].real());
    CHECK(f1.values[j].imag() == f2.values[j].imag());
  }
  d.seed = 1235;
  const SampledFunction f3 = synthesize(d, g);
  CHECK(max_abs_diff(f1.values, f3.values) > 1e-6);
}

TEST_CASE("combination descriptor sums weighted terms") {
  const GridSpec g = make_grid(16.0, 256);
  FunctionDescriptor d;
  d.kind = FunctionDescriptor::Kind::combination;
  d.terms = {tone_descriptor_bins(2), tone_descriptor_bins(7)};
  d.weights = {cplx(2.0, 0.0), cplx(0.0, 1.0)};
  const SampledFunction f = synthesize(d, g);
  const SampledFunction t2 = synthesize(tone_descriptor_bins(2), g);
  const SampledFunction t7 = synthesize(tone_descriptor_bins(7), g);
  for (std::size_t j = 0; j < g.N; j += 17)
    CHECK(std::abs(f.values[j] - (2.0 * t2.values[j] +
                                  cplx(0.0, 1.0) * t7.values[j])) < 1e-14);
}

TEST_CASE("off-grid tone frequency is rejected") {
  const GridSpec g = make_grid(16.0, 256);
  FunctionDescriptor d;
  d.kind = FunctionDescriptor::Kind::pure_tone;
  d.sigma = 1.5 * g.dxi;
  CHECK_THROWS_AS((void)synthesize(d, g), Error);
  try {
    (void)synthesize(d, g);
  } catch (const Error& e) {
    CHECK(e.code() == errc::frequency_off_grid);
  }
  d.sigma = 3.0 * g.dxi;
  CHECK_NOTHROW((void)synthesize(d, g));
  CHECK(frequency_to_bin(3.0 * g.dxi, g) == 3);
}
