#include "hardyline/grid.hpp"

#include <cmath>
#include <numbers>

namespace hardyline {

namespace {
constexpr double kSqrt2Pi = 2.5066282746310002;
}

GridSpec make_grid(double L, std::size_t N) {
  if (!(L > 0.0))
    fail(errc::invalid_parameter, "grid half-length must be positive");
  if (!is_power_of_two(N) || N < 8)
    fail(errc::invalid_parameter,
         "sample count must be a power of two, at least 8");
  GridSpec g;
  g.L = L;
  g.N = N;
  g.dx = 2.0 * L / double(N);
  g.dxi = std::numbers::pi / L;
  return g;
}

SampledFunction make_function(const GridSpec& g) {
  return SampledFunction{g, std::vector<cplx>(g.N, cplx(0.0, 0.0))};
}

SpectralFunction make_spectral(const GridSpec& g) {
  return SpectralFunction{g, std::vector<cplx>(g.N, cplx(0.0, 0.0))};
}

void require_same_grid(const GridSpec& a, const GridSpec& b,
                       const char* where) {
  if (!(a == b)) fail(errc::grid_mismatch, where);
}

// With x_j = -L + j*dx and xi_k = k*dxi we have x_j*xi_k = -k*pi + 2*pi*j*k/N,
// so the continuum kernel e^{-i x_j xi_k} equals (-1)^k * e^{-2*pi*i*j*k/N}:
// the transform is a DFT with an alternating-sign twist and a centered layout.
SpectralFunction forward_fourier(const SampledFunction& f) {
  const GridSpec& g = f.grid;
  std::vector<cplx> a = f.values;
  fft_pow2(a, -1);
  SpectralFunction out = make_spectral(g);
  const double scale = g.dx / kSqrt2Pi;
  const std::size_t half = g.N / 2;
  for (std::size_t i = 0; i < g.N; ++i) {
    const long long k = g.bin_of_index(i);
    const std::size_t m = (i + half) % g.N;  // k mod N
    const double sgn = (k & 1LL) ? -1.0 : 1.0;
    out.coeffs[i] = scale * sgn * a[m];
  }
  return out;
}

SampledFunction inverse_fourier(const SpectralFunction& F) {
  const GridSpec& g = F.grid;
  const std::size_t half = g.N / 2;
  std::vector<cplx> a(g.N);
  for (std::size_t i = 0; i < g.N; ++i) {
    const long long k = g.bin_of_index(i);
    const double sgn = (k & 1LL) ? -1.0 : 1.0;
    a[(i + half) % g.N] = sgn * F.coeffs[i];
  }
  fft_pow2(a, +1);
  SampledFunction out = make_function(g);
  const double scale = kSqrt2Pi / (2.0 * g.L);  // = sqrt(2*pi)/(N*dx)
  for (std::size_t j = 0; j < g.N; ++j) out.values[j] = scale * a[j];
  return out;
}

double l1_norm(const SampledFunction& f) {
  double s = 0.0;
  for (const cplx& v : f.values) s += std::abs(v);
  return f.grid.dx * s;
}

cplx pairing(const SampledFunction& f, const SampledFunction& g) {
  require_same_grid(f.grid, g.grid, "pairing");
  cplx s(0.0, 0.0);
  for (std::size_t j = 0; j < f.values.size(); ++j)
    s += f.values[j] * std::conj(g.values[j]);
  return f.grid.dx * s;
}

double spectral_l2(const SpectralFunction& F) {
  double s = 0.0;
  for (const cplx& c : F.coeffs) s += std::norm(c);
  return std::sqrt(F.grid.dxi * s);
}

}  // namespace hardyline
