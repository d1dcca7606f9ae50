#pragma once

#include "hardyline/descriptors.hpp"
#include "hardyline/operators.hpp"

namespace hardyline {

/// ||f||_{H1} = ||f||_{L1} + ||Hf||_{L1}. Meaningful for mean-zero inputs;
/// callers wanting a diagnostic should inspect membership_report.
double h1_norm(const SampledFunction& f);

/// <f, Theta> = dx * sum_j f_j e^{-i tau x_j} = sqrt(2 pi) * fhat(tau).
cplx inner_pairing_with_theta(const SampledFunction& f,
                              const ModulationSymbol& sym);

/// Default normalizer for the H1_Theta projection: a spectral Gaussian bump
/// centered at bin k with width k/4 bins, truncated to bins [1, 2k], scaled
/// so that <h0, Theta> = 1. Requires 2k below the Nyquist bin.
SampledFunction default_h0(const ModulationSymbol& sym);

/// g = f - <f, Theta> h0, so <g, Theta> = 0. h0 must satisfy <h0,Theta> = 1
/// within 1e-10 (bad-normalizer otherwise).
SampledFunction project_to_h1_theta(const SampledFunction& f,
                                    const ModulationSymbol& sym,
                                    const SampledFunction& h0);
SampledFunction project_to_h1_theta(const SampledFunction& f,
                                    const ModulationSymbol& sym);

/// Splitting of an analytic function with vanishing bins 0 and k into the
/// model-space component (bins [1, k-1]) and the shifted component
/// (bins [k+1, ...]); the two reconstruct the input when residual_mass
/// vanishes.
struct BandDecomposition {
  SampledFunction kernel_part;
  SampledFunction shifted_part;
  double residual_mass = 0.0;
};

BandDecomposition band_decompose(const SampledFunction& f,
                                 const ModulationSymbol& sym,
                                 double tol = 1e-10);

/// Mean-zero profile supported on [a, b) with sup bound 1/(b-a). Sample
/// membership is half-open: a <= x_j < b. Haar/tent profile descriptors are
/// re-windowed onto [a, b); any other descriptor kind is synthesized on the
/// whole grid and restricted.
struct Atom {
  double a = 0.0;
  double b = 0.0;
  SampledFunction values;

  double length() const { return b - a; }
};

Atom make_atom(double a, double b, const FunctionDescriptor& profile,
               const GridSpec& g);

/// Atom additionally orthogonal to b_fn: built as q1 + beta q2 + gamma 1_I
/// with (beta, gamma) solving the two constraints <a,1_I> = <a,b_fn> = 0.
/// Falls back to make_atom when b_fn is (numerically) constant on I, where
/// the two constraints coincide; refuses ill-conditioned profile pairs.
Atom make_b_atom(double a, double b, const SampledFunction& b_fn,
                 const FunctionDescriptor& profile1,
                 const FunctionDescriptor& profile2);

/// (1/|I|) * integral_I |psi - psi_I| with psi_I the sample average on I.
double oscillation_on(const SampledFunction& psi, double a, double b);

struct BmoEstimate {
  double value = 0.0;
  int depth = 0;
  double witness_a = 0.0;
  double witness_b = 0.0;
};

/// Max mean oscillation over the dyadic subintervals of [-L, L] down to the
/// given depth (the root interval included).
BmoEstimate bmo_estimate(const SampledFunction& psi, int depth);

/// Truncation diagnostics: all three entries are relative fractions.
struct MembershipReport {
  double negative_bin_fraction = 0.0;  // spectral l2 on bins < 0
  double bin0_fraction = 0.0;          // |coeff at bin 0| / spectral l2
  double boundary_tail_fraction = 0.0; // l1 mass at |x| > 0.9 L
};

MembershipReport membership_report(const SampledFunction& f);

}  // namespace hardyline
