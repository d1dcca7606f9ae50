#pragma once

#include <complex>
#include <vector>

#include "hardyline/errors.hpp"
#include "hardyline/fft.hpp"

namespace hardyline {

/// Uniform discretization of the truncated line [-L, L] together with its
/// frequency grid. Sample points x_j = -L + j*dx, j = 0..N-1, dx = 2L/N.
/// Frequency bins k = -N/2 .. N/2-1 at xi_k = k*dxi, dxi = pi/L, so that
/// dx*dxi = 2*pi/N exactly.
struct GridSpec {
  double L = 0.0;
  std::size_t N = 0;
  double dx = 0.0;
  double dxi = 0.0;

  double x(std::size_t j) const { return -L + dx * double(j); }
  double xi(long long k) const { return dxi * double(k); }
  long long min_bin() const { return -(long long)(N / 2); }
  long long max_bin() const { return (long long)(N / 2) - 1; }
  /// Array index of frequency bin k in the centered coefficient layout.
  std::size_t bin_index(long long k) const {
    return std::size_t(k + (long long)(N / 2));
  }
  long long bin_of_index(std::size_t i) const {
    return (long long)i - (long long)(N / 2);
  }
  bool operator==(const GridSpec& o) const { return L == o.L && N == o.N; }
};

GridSpec make_grid(double L, std::size_t N);

/// Samples f(x_j) on a grid.
struct SampledFunction {
  GridSpec grid;
  std::vector<cplx> values;
};

/// Fourier coefficients in the centered layout: coeffs[bin_index(k)]
/// approximates the transform at xi_k under the unitary 1/sqrt(2*pi)
/// normalization.
struct SpectralFunction {
  GridSpec grid;
  std::vector<cplx> coeffs;
};

SampledFunction make_function(const GridSpec& g);
SpectralFunction make_spectral(const GridSpec& g);

/// coeffs[k] = (dx/sqrt(2*pi)) * sum_j values[j] * e^{-i x_j xi_k}.
SpectralFunction forward_fourier(const SampledFunction& f);

/// values[j] = (dxi/sqrt(2*pi)) * sum_k coeffs[k] * e^{+i x_j xi_k}.
SampledFunction inverse_fourier(const SpectralFunction& F);

/// Rectangle rule: dx * sum_j |values[j]|.
double l1_norm(const SampledFunction& f);

/// <f, g> = dx * sum_j f_j * conj(g_j).
cplx pairing(const SampledFunction& f, const SampledFunction& g);

void require_same_grid(const GridSpec& a, const GridSpec& b,
                       const char* where);

/// sqrt(dxi * sum |coeffs|^2), the spectral-side l2 mass.
double spectral_l2(const SpectralFunction& F);

}  // namespace hardyline
