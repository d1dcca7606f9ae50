#pragma once

#include "hardyline/grid.hpp"

namespace hardyline {

/// The modulation symbol Theta(x) = e^{i tau x} with tau = k*dxi, an exact
/// frequency-grid multiple so that multiplication by Theta is an exact bin
/// shift.
struct ModulationSymbol {
  GridSpec grid;
  long long tau_bins = 1;

  double tau() const { return grid.xi(tau_bins); }
};

ModulationSymbol make_symbol(const GridSpec& g, long long tau_bins);

/// Boundary values of Theta (conjugate = tone at -tau_bins).
SampledFunction symbol_values(const ModulationSymbol& sym);

/// The fixed smooth cutoff: eta(xi) = 1 for |xi| <= 1, 0 for |xi| >= 2,
/// glued by s(2-|xi|)/(s(2-|xi|)+s(|xi|-1)) with s(t) = e^{-1/t} (t > 0).
struct CutoffProfile {
  static double eta(double xi);
};

/// Szego projections as frequency multipliers. project_plus keeps bins
/// k >= 0, project_minus keeps bins k < 0; they sum to the identity.
SampledFunction project_plus(const SampledFunction& f);
SampledFunction project_minus(const SampledFunction& f);
SpectralFunction project_plus(const SpectralFunction& F);
SpectralFunction project_minus(const SpectralFunction& F);

/// Multiplier -i*sign(xi_k) with sign(0) = 0. Agrees with -i(P+ - P-) on
/// mean-zero inputs.
SampledFunction hilbert(const SampledFunction& f);

/// Pointwise product phi*f.
SampledFunction multiply(const SampledFunction& phi, const SampledFunction& f);

/// Exact cyclic shift of the centered spectrum by s bins, i.e. multiplication
/// by the sampled tone e^{i s dxi x}. Refuses inputs whose spectral mass
/// within |s| bins of the wrap edge exceeds guard_tol (relative l2), unless
/// allow_wrap.
SampledFunction modulate(const SampledFunction& f, long long s,
                         bool allow_wrap = false, double guard_tol = 1e-10);
SpectralFunction modulate(const SpectralFunction& F, long long s,
                          bool allow_wrap = false, double guard_tol = 1e-10);

/// Toeplitz operator with the anti-analytic symbol conj(Theta):
/// T f = P+(conj(Theta) * f), realized as a shift down by tau_bins followed
/// by project_plus.
SampledFunction toeplitz_apply(const ModulationSymbol& sym,
                               const SampledFunction& f,
                               bool allow_wrap = false);

/// Generic sampled-symbol Toeplitz: P+(phibar * f). The given function is the
/// multiplier itself (already conjugated by the caller when appropriate).
SampledFunction toeplitz_apply(const SampledFunction& phibar,
                               const SampledFunction& f);

/// Hankel operator H f = P-(conj(Theta) * f); complementary to Toeplitz.
SampledFunction hankel_apply(const ModulationSymbol& sym,
                             const SampledFunction& f,
                             bool allow_wrap = false);
SampledFunction hankel_apply(const SampledFunction& phibar,
                             const SampledFunction& f);

/// [b, H] f = b * Hf - H(b * f).
SampledFunction commutator_bH(const SampledFunction& b,
                              const SampledFunction& f);

/// Frequency multiplier eta(xi/r): identity below r, cutoff above 2r.
SampledFunction smooth_lowpass(const SampledFunction& f, double r);

/// T_R f - T_R T_eps f: passes the band [2*eps, R] and regularizes both ends.
SampledFunction band_regularize(const SampledFunction& f, double R,
                                double eps);

/// Fraction (relative l2) of spectral mass within `margin` bins of the wrap
/// edge on the side spectra move toward under a shift of sign `direction`.
double edge_mass_fraction(const SpectralFunction& F, long long margin,
                          int direction);

}  // namespace hardyline
