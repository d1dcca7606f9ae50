#pragma once

#include <map>
#include <string>
#include <vector>

#include "hardyline/spaces.hpp"

namespace hardyline {

/// Deterministic family of test inputs. Per-trial seeds are derived from
/// (seed, trial), so trials may evaluate in any order or in parallel with
/// bitwise-identical results.
struct FamilySpec {
  enum class Kind { random_band, atoms, tones, mixed };
  Kind kind = Kind::random_band;
  long long lo = 1;        // bin range for the spectral generators
  long long hi = 128;
  std::size_t size = 200;
  std::uint64_t seed = 42;
};

const char* family_kind_name(FamilySpec::Kind k);
FamilySpec::Kind family_kind_from_name(const std::string& s);

/// Raw family member on g (before any operator-domain projection). The
/// spectral generators avoid bins 0 and sym.tau_bins by construction.
SampledFunction family_member(const FamilySpec& fam, const GridSpec& g,
                              const ModulationSymbol& sym, std::size_t trial);

/// Operators whose bound is estimated. The commutator maps into L1, so its
/// ratio uses the L1 norm in the numerator; all others use the H1 norm.
enum class OperatorId {
  identity,
  toeplitz,
  hankel,
  hilbert_op,
  project_plus_op,
  commutator,
};

const char* operator_name(OperatorId op);
OperatorId operator_from_name(const std::string& s);

struct GridRung {
  double L = 64.0;
  std::size_t N = 4096;
};

struct RefineStep {
  int step = 0;
  long long bin = 0;
  double ratio = 0.0;
};

struct RungEstimate {
  double L = 0.0;
  std::size_t N = 0;
  long long k = 0;
  std::vector<double> ratios;  // per trial; NaN marks a discarded trial
  std::size_t discarded = 0;
  std::size_t best_trial = 0;
  double sup_random = 0.0;
  double sup_ratio = 0.0;
  std::vector<RefineStep> history;
  std::map<std::string, double> diagnostics;
};

struct BoundEstimate {
  std::string op;
  FamilySpec fam;
  long long tau_bins = 0;
  std::vector<RungEstimate> rungs;
};

struct EstimateOptions {
  int refine_steps = 200;
  double discard_tol = 1e-8;
};

/// Sup over the family of ratio(op f) followed by a bin-at-a-time coordinate
/// ascent on the best trial, repeated per rung. Family members are projected
/// into the operator's domain before evaluation; members whose projected H1
/// norm falls below discard_tol are skipped.
BoundEstimate estimate_operator_bound(OperatorId op, const FamilySpec& fam,
                                      const std::vector<GridRung>& ladder,
                                      long long tau_bins,
                                      const EstimateOptions& opts = {});

struct LadderRung {
  double L = 0.0;
  std::size_t N = 0;
  long long k = 0;
  double input_h1 = 0.0;
  double output_h1 = 0.0;
  double ratio = 0.0;
};

struct LadderReport {
  bool control = false;  // true: input projected into H1_Theta
  std::vector<LadderRung> rungs;
  bool monotone_increasing = false;
  double slope_vs_logL = 0.0;
  double spread() const;  // max ratio / min ratio - 1
};

/// Ratio h1(T_{conj Theta} f) / h1(f) along a doubling-L ladder holding the
/// physical frequency tau fixed: tau_bins is interpreted on the first rung
/// and rescaled as k_r = tau_bins * L_r / L_0 so that tau = k_r * dxi_r stays
/// constant. The input descriptor is synthesized per rung and reduced to its
/// analytic mean-zero part. With control = false the input must carry
/// spectral mass at tau (|fhat(tau)| >= 1e-3 of the spectral l2 mass); with
/// control = true the input is projected into H1_Theta first (its bin-k
/// coefficient is zeroed via the default h0).
LadderReport divergence_ladder(const FunctionDescriptor& input,
                               long long tau_bins,
                               const std::vector<GridRung>& ladder,
                               bool control = false);

/// Per-rung sup of (h1(f1) + h1(f2)) / h1(f) over a family decomposed by
/// band_decompose; diagnostics record the worst reconstruction error and
/// triangle-inequality violation.
BoundEstimate decomposition_constant(const FamilySpec& fam,
                                     const std::vector<GridRung>& ladder,
                                     long long tau_bins);

struct IdentityResult {
  std::string name;
  double residual = 0.0;
  double tol = 1e-10;
  bool pass = false;
};

struct IdentityReport {
  double L = 0.0;
  std::size_t N = 0;
  long long k = 0;
  std::uint64_t seed = 0;
  std::vector<IdentityResult> results;
  bool all_pass = false;
};

/// Runs the algebraic identity battery on a fixed deterministic family and
/// reports the max relative residual per identity.
IdentityReport identity_suite(const GridSpec& g, const ModulationSymbol& sym,
                              std::uint64_t seed);

/// Reduce a function to its analytic mean-zero part (bins >= 1).
SampledFunction analytic_meanzero_part(const SampledFunction& f);

}  // namespace hardyline
