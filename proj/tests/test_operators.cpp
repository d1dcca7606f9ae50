#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hardyline/operators.hpp"
#include "hardyline/descriptors.hpp"
#include "hardyline/rng.hpp"

using namespace hardyline;

namespace {

constexpr double kPi = std::numbers::pi;

double max_abs_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  REQUIRE(a.size() == b.size());
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

SampledFunction sampled_cos(const GridSpec& g, long long s) {
  SampledFunction f = make_function(g);
  for (std::size_t j = 0; j < g.N; ++j) f.values[j] = std::cos(g.xi(s) * g.x(j));
  return f;
}

SampledFunction sampled_sin(const GridSpec& g, long long s) {
  SampledFunction f = make_function(g);
  for (std::size_t j = 0; j < g.N; ++j) f.values[j] = std::sin(g.xi(s) * g.x(j));
  return f;
}

SampledFunction random_band(const GridSpec& g, long long lo, long long hi,
                            std::uint64_t seed) {
  FunctionDescriptor d;
  d.kind = FunctionDescriptor::Kind::random_band;
  d.lo = lo;
  d.hi = hi;
  d.seed = seed;
  return synthesize(d, g);
}

}  // namespace

TEST_CASE("szego projections sort tones by frequency sign") {
  const GridSpec g = make_grid(16.0, 256);
  const SampledFunction plus = synthesize(tone_descriptor_bins(5), g);
  const SampledFunction minus = synthesize(tone_descriptor_bins(-5), g);

  CHECK(max_abs_diff(project_plus(plus).values, plus.values) < 1e-12);
  CHECK(l1_norm(project_plus(minus)) < 1e-12);
  CHECK(l1_norm(project_minus(plus)) < 1e-12);
  CHECK(max_abs_diff(project_minus(minus).values, minus.values) < 1e-12);

  // cos(sigma x) = (e^{i sigma x} + e^{-i sigma x})/2 splits evenly.
  const SampledFunction c = sampled_cos(g, 5);
  SampledFunction half = plus;
  for (cplx& v : half.values) v *= 0.5;
  CHECK(max_abs_diff(project_plus(c).values, half.values) < 1e-12);
}

TEST_CASE("projections are idempotent and partition the identity") {
  const GridSpec g = make_grid(32.0, 512);
  Rng rng(21);
  SampledFunction f = make_function(g);
  for (cplx& v : f.values) v = rng.next_complex_normal();

  const SampledFunction p = project_plus(f);
  const SampledFunction m = project_minus(f);
  SampledFunction sum = p;
  for (std::size_t j = 0; j < g.N; ++j) sum.values[j] += m.values[j];
  CHECK(max_abs_diff(sum.values, f.values) < 1e-12);
  CHECK(max_abs_diff(project_plus(p).values, p.values) < 1e-12);
  CHECK(l1_norm(project_plus(m)) < 1e-10);
}

TEST_CASE("hilbert transform maps cos to sin and sin to -cos") {
  const GridSpec g = make_grid(64.0, 4096);
  for (long long s : {1LL, 8LL, 100LL}) {
    const SampledFunction hc = hilbert(sampled_cos(g, s));
    const SampledFunction hs = hilbert(sampled_sin(g, s));
    const SampledFunction sc = sampled_cos(g, s);
    const SampledFunction ss = sampled_sin(g, s);
    double worst = 0.0;
    for (std::size_t j = 0; j < g.N; ++j) {
      worst = std::max(worst, std::abs(hc.values[j] - ss.values[j]));
      worst = std::max(worst, std::abs(hs.values[j] + sc.values[j]));
    }
    CHECK(worst < 1e-12);
  }
}

TEST_CASE("hilbert squares to minus identity on mean-zero inputs") {
  const GridSpec g = make_grid(32.0, 512);
  const SampledFunction f = random_band(g, -60, 60, 5);
  SampledFunction f0 = f;
  // random_band leaves bin 0 alone only when outside [lo,hi]; remove it.
  SpectralFunction F = forward_fourier(f0);
  F.coeffs[g.bin_index(0)] = 0.0;
  f0 = inverse_fourier(F);
  const SampledFunction hh = hilbert(hilbert(f0));
  SampledFunction neg = f0;
  for (cplx& v : neg.values) v = -v;
  CHECK(max_abs_diff(hh.values, neg.values) < 1e-12);

  SampledFunction ones = make_function(g);
  for (cplx& v : ones.values) v = 1.0;
  CHECK(l1_norm(hilbert(ones)) < 1e-12);
}

TEST_CASE("modulate shifts tones exactly and inverts cleanly") {
  const GridSpec g = make_grid(16.0, 256);
  const SampledFunction t3 = synthesize(tone_descriptor_bins(3), g);
  const SampledFunction t10 = synthesize(tone_descriptor_bins(10), g);
  CHECK(max_abs_diff(modulate(t3, 7).values, t10.values) < 1e-12);

  const SampledFunction f = random_band(g, -40, 40, 6);
  const SampledFunction back = modulate(modulate(f, 13), -13);
  CHECK(max_abs_diff(back.values, f.values) < 1e-12);
}

TEST_CASE("modulate guards against wraparound unless forced") {
  const GridSpec g = make_grid(16.0, 256);
  const SampledFunction edge =
      synthesize(tone_descriptor_bins(g.max_bin() - 2), g);
  CHECK_THROWS_AS((void)modulate(edge, 5), Error);
  try {
    (void)modulate(edge, 5);
  } catch (const Error& e) {
    CHECK(e.code() == errc::wraparound_risk);
  }
  CHECK_NOTHROW((void)modulate(edge, 5, /*allow_wrap=*/true));
  CHECK_THROWS_AS((void)modulate(edge, (long long)g.N), Error);
}

TEST_CASE("toeplitz with the conjugate symbol shifts analytic content down") {
  const GridSpec g = make_grid(16.0, 256);
  const ModulationSymbol sym = make_symbol(g, 8);

  // Above the symbol frequency: exact downshift.
  const SampledFunction t20 = synthesize(tone_descriptor_bins(20), g);
  const SampledFunction t12 = synthesize(tone_descriptor_bins(12), g);
  CHECK(max_abs_diff(toeplitz_apply(sym, t20).values, t12.values) < 1e-12);

  // Below the symbol frequency: annihilated (the model-space kernel).
  for (long long s : {1LL, 4LL, 7LL}) {
    const SampledFunction ts = synthesize(tone_descriptor_bins(s), g);
    CHECK(l1_norm(toeplitz_apply(sym, ts)) < 1e-12);
  }

  // T(Theta g) = g for analytic g.
  const SampledFunction gfun = random_band(g, 1, 40, 7);
  const SampledFunction theta_g = multiply(symbol_values(sym), gfun);
  CHECK(max_abs_diff(toeplitz_apply(sym, theta_g).values, gfun.values) <
        1e-12);
}

TEST_CASE("sampled-symbol toeplitz agrees with the shift realization") {
  const GridSpec g = make_grid(16.0, 256);
  const ModulationSymbol sym = make_symbol(g, 8);
  SampledFunction conj_theta = symbol_values(sym);
  for (cplx& v : conj_theta.values) v = std::conj(v);
  const SampledFunction f = random_band(g, 1, 40, 8);
  CHECK(max_abs_diff(toeplitz_apply(conj_theta, f).values,
                     toeplitz_apply(sym, f).values) < 1e-12);
}

TEST_CASE("hankel keeps what toeplitz drops and they sum to the multiplier") {
  const GridSpec g = make_grid(16.0, 256);
  const ModulationSymbol sym = make_symbol(g, 8);

  const SampledFunction t3 = synthesize(tone_descriptor_bins(3), g);
  const SampledFunction tm5 = synthesize(tone_descriptor_bins(-5), g);
  CHECK(max_abs_diff(hankel_apply(sym, t3).values, tm5.values) < 1e-12);
  const SampledFunction t20 = synthesize(tone_descriptor_bins(20), g);
  CHECK(l1_norm(hankel_apply(sym, t20)) < 1e-12);

  SampledFunction conj_theta = symbol_values(sym);
  for (cplx& v : conj_theta.values) v = std::conj(v);
  const SampledFunction f = random_band(g, 1, 40, 9);
  const SampledFunction lhs_t = toeplitz_apply(sym, f);
  const SampledFunction lhs_h = hankel_apply(sym, f);
  const SampledFunction rhs = multiply(conj_theta, f);
  double worst = 0.0;
  for (std::size_t j = 0; j < g.N; ++j)
    worst = std::max(worst, std::abs(lhs_t.values[j] + lhs_h.values[j] -
                                     rhs.values[j]));
  CHECK(worst < 1e-12);
}

TEST_CASE("commutator vanishes for constant symbols") {
  const GridSpec g = make_grid(32.0, 512);
  SampledFunction b = make_function(g);
  for (cplx& v : b.values) v = cplx(2.5, -0.5);
  const SampledFunction f = random_band(g, -50, 50, 10);
  CHECK(l1_norm(commutator_bH(b, f)) < 1e-10);
}

TEST_CASE("commutator with conj(Theta) kills conjugate-analytic inputs") {
  const GridSpec g = make_grid(16.0, 256);
  const ModulationSymbol sym = make_symbol(g, 8);
  SampledFunction conj_theta = symbol_values(sym);
  for (cplx& v : conj_theta.values) v = std::conj(v);

  const SampledFunction f1 = random_band(g, -40, -1, 11);
  CHECK(l1_norm(commutator_bH(conj_theta, f1)) < 1e-10);
}

TEST_CASE("commutator equals -2i hankel on the shifted-analytic class") {
  const GridSpec g = make_grid(16.0, 256);
  const long long k = 8;
  const ModulationSymbol sym = make_symbol(g, k);
  SampledFunction conj_theta = symbol_values(sym);
  for (cplx& v : conj_theta.values) v = std::conj(v);

  // Analytic, mean-zero, and no mass at bin k: the identity's exact domain.
  SampledFunction f2 = random_band(g, 1, 40, 12);
  SpectralFunction F = forward_fourier(f2);
  F.coeffs[g.bin_index(k)] = 0.0;
  f2 = inverse_fourier(F);

  const SampledFunction comm = commutator_bH(conj_theta, f2);
  const SampledFunction hk = hankel_apply(sym, f2);
  double worst = 0.0;
  for (std::size_t j = 0; j < g.N; ++j)
    worst = std::max(worst,
                     std::abs(comm.values[j] + 2.0 * cplx(0.0, 1.0) *
                                                   hk.values[j]));
  CHECK(worst < 1e-12);
}

TEST_CASE("cutoff profile has the right plateau, decay, and symmetry point") {
  CHECK(CutoffProfile::eta(0.0) == doctest::Approx(1.0));
  CHECK(CutoffProfile::eta(0.7) == doctest::Approx(1.0));
  CHECK(CutoffProfile::eta(1.0) == doctest::Approx(1.0));
  CHECK(CutoffProfile::eta(2.0) == doctest::Approx(0.0));
  CHECK(CutoffProfile::eta(3.0) == doctest::Approx(0.0));
  CHECK(CutoffProfile::eta(1.5) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(CutoffProfile::eta(-1.5) == doctest::Approx(0.5).epsilon(1e-12));
  const double inside = CutoffProfile::eta(1.2);
  CHECK(inside < 1.0);
  CHECK(inside > CutoffProfile::eta(1.8));
}

TEST_CASE("smooth_lowpass is the identity below r and zero above 2r") {
  const GridSpec g = make_grid(16.0, 256);
  const double r = 10.0 * g.dxi;
  const SampledFunction low = random_band(g, -10, 10, 13);
  CHECK(max_abs_diff(smooth_lowpass(low, r).values, low.values) < 1e-12);

  const SampledFunction hi = synthesize(tone_descriptor_bins(25), g);
  CHECK(l1_norm(smooth_lowpass(hi, r)) < 1e-12);

  CHECK_THROWS_AS((void)smooth_lowpass(low, 0.0), Error);
  CHECK_THROWS_AS((void)smooth_lowpass(low, -1.0), Error);
}

TEST_CASE("band_regularize passes the middle band and removes constants") {
  const GridSpec g = make_grid(16.0, 256);
  const double R = 30.0 * g.dxi;
  const double eps = 2.0 * g.dxi;

  // Tones in [2 eps, R] pass through untouched.
  for (long long s : {4LL, 10LL, 30LL, -10LL}) {
    const SampledFunction t = synthesize(tone_descriptor_bins(s), g);
    CHECK(max_abs_diff(band_regularize(t, R, eps).values, t.values) < 1e-10);
  }

  SampledFunction ones = make_function(g);
  for (cplx& v : ones.values) v = 1.0;
  CHECK(l1_norm(band_regularize(ones, R, eps)) < 1e-12);

  const SampledFunction far = synthesize(tone_descriptor_bins(100), g);
  CHECK(l1_norm(band_regularize(far, R, eps)) < 1e-12);

  CHECK_THROWS_AS((void)band_regularize(ones, 1.0, 1.0), Error);
  CHECK_THROWS_AS((void)band_regularize(ones, 1.0, 2.0), Error);
  CHECK_THROWS_AS((void)band_regularize(ones, -1.0, 0.5), Error);
}

TEST_CASE("make_symbol validates the bin frequency") {
  const GridSpec g = make_grid(16.0, 256);
  CHECK_THROWS_AS((void)make_symbol(g, 0), Error);
  CHECK_THROWS_AS((void)make_symbol(g, -3), Error);
  CHECK_THROWS_AS((void)make_symbol(g, 128), Error);
  const ModulationSymbol sym = make_symbol(g, 8);
  CHECK(sym.tau() == doctest::Approx(8.0 * kPi / 16.0));
  const SampledFunction theta = symbol_values(sym);
  const SampledFunction tone = synthesize(tone_descriptor_bins(8), g);
  CHECK(max_abs_diff(theta.values, tone.values) < 1e-14);
}
