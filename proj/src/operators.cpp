#include "hardyline/operators.hpp"

#include <cmath>

namespace hardyline {

ModulationSymbol make_symbol(const GridSpec& g, long long tau_bins) {
  if (tau_bins < 1)
    fail(errc::invalid_parameter, "tau_bins must be at least 1");
  if (tau_bins >= (long long)(g.N / 2))
    fail(errc::invalid_parameter, "tau_bins must be below the Nyquist bin");
  return ModulationSymbol{g, tau_bins};
}

SampledFunction symbol_values(const ModulationSymbol& sym) {
  const GridSpec& g = sym.grid;
  SampledFunction f = make_function(g);
  const double tau = sym.tau();
  for (std::size_t j = 0; j < g.N; ++j) {
    const double ph = tau * g.x(j);
    f.values[j] = cplx(std::cos(ph), std::sin(ph));
  }
  return f;
}

double CutoffProfile::eta(double xi) {
  const double a = std::abs(xi);
  if (a <= 1.0) return 1.0;
  if (a >= 2.0) return 0.0;
  const auto s = [](double t) { return t > 0.0 ? std::exp(-1.0 / t) : 0.0; };
  const double num = s(2.0 - a);
  return num / (num + s(a - 1.0));
}

SpectralFunction project_plus(const SpectralFunction& F) {
  SpectralFunction out = F;
  const std::size_t half = F.grid.N / 2;
  for (std::size_t i = 0; i < half; ++i) out.coeffs[i] = 0.0;
  return out;
}

SpectralFunction project_minus(const SpectralFunction& F) {
  SpectralFunction out = F;
  const std::size_t half = F.grid.N / 2;
  for (std::size_t i = half; i < F.grid.N; ++i) out.coeffs[i] = 0.0;
  return out;
}

SampledFunction project_plus(const SampledFunction& f) {
  return inverse_fourier(project_plus(forward_fourier(f)));
}

SampledFunction project_minus(const SampledFunction& f) {
  return inverse_fourier(project_minus(forward_fourier(f)));
}

SampledFunction hilbert(const SampledFunction& f) {
  SpectralFunction F = forward_fourier(f);
  for (std::size_t i = 0; i < F.grid.N; ++i) {
    const long long k = F.grid.bin_of_index(i);
    if (k > 0)
      F.coeffs[i] *= cplx(0.0, -1.0);
    else if (k < 0)
      F.coeffs[i] *= cplx(0.0, 1.0);
    else
      F.coeffs[i] = 0.0;
  }
  return inverse_fourier(F);
}

SampledFunction multiply(const SampledFunction& phi,
                         const SampledFunction& f) {
  require_same_grid(phi.grid, f.grid, "multiply");
  SampledFunction out = make_function(f.grid);
  for (std::size_t j = 0; j < f.grid.N; ++j)
    out.values[j] = phi.values[j] * f.values[j];
  return out;
}

double edge_mass_fraction(const SpectralFunction& F, long long margin,
                          int direction) {
  const GridSpec& g = F.grid;
  double total = 0.0;
  for (const cplx& c : F.coeffs) total += std::norm(c);
  if (total == 0.0) return 0.0;
  double edge = 0.0;
  if (direction > 0) {
    // shifting up: the top `margin` bins wrap to the bottom
    for (long long k = g.max_bin() - margin + 1; k <= g.max_bin(); ++k)
      edge += std::norm(F.coeffs[g.bin_index(k)]);
  } else {
    for (long long k = g.min_bin(); k < g.min_bin() + margin; ++k)
      edge += std::norm(F.coeffs[g.bin_index(k)]);
  }
  return std::sqrt(edge / total);
}

SpectralFunction modulate(const SpectralFunction& F, long long s,
                          bool allow_wrap, double guard_tol) {
  const GridSpec& g = F.grid;
  if (std::llabs(s) >= (long long)(g.N / 2))
    fail(errc::invalid_parameter, "shift must satisfy |s| < N/2");
  if (s == 0) return F;
  if (!allow_wrap && edge_mass_fraction(F, std::llabs(s), s > 0 ? 1 : -1) >
                         guard_tol)
    fail(errc::wraparound_risk,
         "spectral mass near the wrap edge exceeds the guard tolerance");
  SpectralFunction out = make_spectral(g);
  const long long n = (long long)g.N;
  for (long long i = 0; i < n; ++i) {
    const long long src = ((i - s) % n + n) % n;
    out.coeffs[std::size_t(i)] = F.coeffs[std::size_t(src)];
  }
  return out;
}

SampledFunction modulate(const SampledFunction& f, long long s,
                         bool allow_wrap, double guard_tol) {
  return inverse_fourier(modulate(forward_fourier(f), s, allow_wrap,
                                  guard_tol));
}

SampledFunction toeplitz_apply(const ModulationSymbol& sym,
                               const SampledFunction& f, bool allow_wrap) {
  require_same_grid(sym.grid, f.grid, "toeplitz_apply");
  SpectralFunction F = forward_fourier(f);
  return inverse_fourier(
      project_plus(modulate(F, -sym.tau_bins, allow_wrap)));
}

SampledFunction toeplitz_apply(const SampledFunction& phibar,
                               const SampledFunction& f) {
  return project_plus(multiply(phibar, f));
}

SampledFunction hankel_apply(const ModulationSymbol& sym,
                             const SampledFunction& f, bool allow_wrap) {
  require_same_grid(sym.grid, f.grid, "hankel_apply");
  SpectralFunction F = forward_fourier(f);
  return inverse_fourier(
      project_minus(modulate(F, -sym.tau_bins, allow_wrap)));
}

SampledFunction hankel_apply(const SampledFunction& phibar,
                             const SampledFunction& f) {
  return project_minus(multiply(phibar, f));
}

SampledFunction commutator_bH(const SampledFunction& b,
                              const SampledFunction& f) {
  require_same_grid(b.grid, f.grid, "commutator_bH");
  SampledFunction left = multiply(b, hilbert(f));
  SampledFunction right = hilbert(multiply(b, f));
  for (std::size_t j = 0; j < f.grid.N; ++j) left.values[j] -= right.values[j];
  return left;
}

SampledFunction smooth_lowpass(const SampledFunction& f, double r) {
  if (!(r > 0.0)) fail(errc::invalid_parameter, "cutoff scale must be positive");
  SpectralFunction F = forward_fourier(f);
  for (std::size_t i = 0; i < F.grid.N; ++i)
    F.coeffs[i] *= CutoffProfile::eta(F.grid.xi(F.grid.bin_of_index(i)) / r);
  return inverse_fourier(F);
}

SampledFunction band_regularize(const SampledFunction& f, double R,
                                double eps) {
  if (!(eps > 0.0) || !(eps < R))
    fail(errc::invalid_parameter, "band_regularize requires 0 < eps < R");
  SampledFunction low = smooth_lowpass(f, R);
  SampledFunction lowhigh = smooth_lowpass(smooth_lowpass(f, eps), R);
  for (std::size_t j = 0; j < f.grid.N; ++j)
    low.values[j] -= lowhigh.values[j];
  return low;
}

}  // namespace hardyline
