#include "hardyline/descriptors.hpp"

#include <cmath>

#include "hardyline/rng.hpp"

namespace hardyline {

const char* kind_name(FunctionDescriptor::Kind k) {
  using K = FunctionDescriptor::Kind;
  switch (k) {
    case K::pure_tone: return "pure_tone";
    case K::gaussian_space: return "gaussian_space";
    case K::gaussian_band: return "gaussian_band";
    case K::cauchy_sq: return "cauchy_sq";
    case K::haar_profile: return "haar_profile";
    case K::tent_profile: return "tent_profile";
    case K::random_band: return "random_band";
    case K::combination: return "combination";
  }
  return "unknown";
}

FunctionDescriptor::Kind kind_from_name(const std::string& s) {
  using K = FunctionDescriptor::Kind;
  if (s == "pure_tone") return K::pure_tone;
  if (s == "gaussian_space") return K::gaussian_space;
  if (s == "gaussian_band") return K::gaussian_band;
  if (s == "cauchy_sq") return K::cauchy_sq;
  if (s == "haar_profile") return K::haar_profile;
  if (s == "tent_profile") return K::tent_profile;
  if (s == "random_band") return K::random_band;
  if (s == "combination") return K::combination;
  fail(errc::parse_error, "unknown descriptor kind '" + s + "'");
}

long long frequency_to_bin(double sigma, const GridSpec& g) {
  const double ratio = sigma / g.dxi;
  const double rounded = std::round(ratio);
  if (std::abs(ratio - rounded) > 1e-9 * (1.0 + std::abs(ratio)))
    fail(errc::frequency_off_grid,
         "frequency is not an integer multiple of dxi");
  const long long k = (long long)rounded;
  if (k < g.min_bin() || k > g.max_bin())
    fail(errc::frequency_off_grid, "frequency outside the representable band");
  return k;
}

FunctionDescriptor tone_descriptor_bins(long long bin) {
  FunctionDescriptor d;
  d.kind = FunctionDescriptor::Kind::pure_tone;
  d.sigma = double(bin);
  d.sigma_in_bins = true;
  return d;
}

namespace {

SampledFunction synth_tone(const FunctionDescriptor& d, const GridSpec& g) {
  long long k;
  if (d.sigma_in_bins) {
    const double rounded = std::round(d.sigma);
    if (std::abs(d.sigma - rounded) > 1e-9)
      fail(errc::frequency_off_grid, "sigma_bins must be an integer");
    k = (long long)rounded;
    if (k < g.min_bin() || k > g.max_bin())
      fail(errc::frequency_off_grid, "tone bin outside the grid band");
  } else {
    k = frequency_to_bin(d.sigma, g);
  }
  SampledFunction f = make_function(g);
  const double sigma = g.xi(k);
  for (std::size_t j = 0; j < g.N; ++j) {
    const double ph = sigma * g.x(j);
    f.values[j] = cplx(std::cos(ph), std::sin(ph));
  }
  return f;
}

SampledFunction synth_gaussian_space(const FunctionDescriptor& d,
                                     const GridSpec& g) {
  if (!(d.width > 0.0)) fail(errc::invalid_parameter, "width must be positive");
  SampledFunction f = make_function(g);
  for (std::size_t j = 0; j < g.N; ++j) {
    const double t = (g.x(j) - d.center) / d.width;
    f.values[j] = std::exp(-0.5 * t * t);
  }
  return f;
}

SampledFunction synth_gaussian_band(const FunctionDescriptor& d,
                                    const GridSpec& g) {
  if (!(d.width > 0.0))
    fail(errc::invalid_parameter, "bandwidth must be positive");
  SpectralFunction F = make_spectral(g);
  for (std::size_t i = 0; i < g.N; ++i) {
    const double t = (g.xi(g.bin_of_index(i)) - d.center) / d.width;
    F.coeffs[i] = std::exp(-0.5 * t * t);
  }
  return inverse_fourier(F);
}

SampledFunction synth_cauchy_sq(const GridSpec& g) {
  SampledFunction f = make_function(g);
  for (std::size_t j = 0; j < g.N; ++j) {
    const cplx z(g.x(j), 1.0);
    f.values[j] = 1.0 / (z * z);
  }
  return f;
}

SampledFunction synth_haar(const FunctionDescriptor& d, const GridSpec& g) {
  if (!(d.b > d.a)) fail(errc::invalid_parameter, "empty interval");
  SampledFunction f = make_function(g);
  const double mid = 0.5 * (d.a + d.b);
  for (std::size_t j = 0; j < g.N; ++j) {
    const double x = g.x(j);
    if (x >= d.a && x < mid)
      f.values[j] = 1.0;
    else if (x >= mid && x < d.b)
      f.values[j] = -1.0;
  }
  return f;
}

SampledFunction synth_tent(const FunctionDescriptor& d, const GridSpec& g) {
  if (!(d.b > d.a)) fail(errc::invalid_parameter, "empty interval");
  SampledFunction f = make_function(g);
  const double mid = 0.5 * (d.a + d.b);
  const double half = 0.5 * (d.b - d.a);
  for (std::size_t j = 0; j < g.N; ++j) {
    const double x = g.x(j);
    if (x >= d.a && x < d.b)
      f.values[j] = 1.0 - std::abs(x - mid) / half;
  }
  return f;
}

SampledFunction synth_random_band(const FunctionDescriptor& d,
                                  const GridSpec& g) {
  if (d.lo > d.hi) fail(errc::invalid_parameter, "empty bin range");
  if (d.lo < g.min_bin() || d.hi > g.max_bin())
    fail(errc::invalid_parameter, "bin range outside the grid band");
  Rng rng(d.seed);
  SpectralFunction F = make_spectral(g);
  const double mid = 0.5 * double(d.lo + d.hi);
  const double spread = std::max(1.0, double(d.hi - d.lo) / 4.0);
  for (long long k = d.lo; k <= d.hi; ++k) {
    const double t = (double(k) - mid) / spread;
    F.coeffs[g.bin_index(k)] = std::exp(-0.5 * t * t) *
                               rng.next_complex_normal();
  }
  return inverse_fourier(F);
}

}  // namespace

SampledFunction synthesize(const FunctionDescriptor& d, const GridSpec& g) {
  using K = FunctionDescriptor::Kind;
  switch (d.kind) {
    case K::pure_tone: return synth_tone(d, g);
    case K::gaussian_space: return synth_gaussian_space(d, g);
    case K::gaussian_band: return synth_gaussian_band(d, g);
    case K::cauchy_sq: return synth_cauchy_sq(g);
    case K::haar_profile: return synth_haar(d, g);
    case K::tent_profile: return synth_tent(d, g);
    case K::random_band: return synth_random_band(d, g);
    case K::combination: {
      if (d.terms.empty()) fail(errc::invalid_parameter, "empty combination");
      if (d.terms.size() != d.weights.size())
        fail(errc::invalid_parameter, "weights/terms length mismatch");
      SampledFunction acc = make_function(g);
      for (std::size_t t = 0; t < d.terms.size(); ++t) {
        SampledFunction part = synthesize(d.terms[t], g);
        for (std::size_t j = 0; j < g.N; ++j)
          acc.values[j] += d.weights[t] * part.values[j];
      }
      return acc;
    }
  }
  fail(errc::invalid_parameter, "unhandled descriptor kind");
}

}  // namespace hardyline
