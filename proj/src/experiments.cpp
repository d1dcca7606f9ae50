#include "hardyline/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hardyline/parallel.hpp"
#include "hardyline/rng.hpp"

namespace hardyline {

namespace {

const double kNaN = std::numeric_limits<double>::quiet_NaN();

double l2_of(const SampledFunction& f) {
  return std::sqrt(std::abs(pairing(f, f)));
}

}  // namespace

const char* family_kind_name(FamilySpec::Kind k) {
  switch (k) {
    case FamilySpec::Kind::random_band: return "random_band";
    case FamilySpec::Kind::atoms: return "atoms";
    case FamilySpec::Kind::tones: return "tones";
    case FamilySpec::Kind::mixed: return "mixed";
  }
  return "unknown";
}

FamilySpec::Kind family_kind_from_name(const std::string& s) {
  if (s == "random_band") return FamilySpec::Kind::random_band;
  if (s == "atoms") return FamilySpec::Kind::atoms;
  if (s == "tones") return FamilySpec::Kind::tones;
  if (s == "mixed") return FamilySpec::Kind::mixed;
  fail(errc::parse_error, "unknown family kind '" + s + "'");
}

const char* operator_name(OperatorId op) {
  switch (op) {
    case OperatorId::identity: return "identity";
    case OperatorId::toeplitz: return "toeplitz";
    case OperatorId::hankel: return "hankel";
    case OperatorId::hilbert_op: return "hilbert";
    case OperatorId::project_plus_op: return "project_plus";
    case OperatorId::commutator: return "commutator";
  }
  return "unknown";
}

OperatorId operator_from_name(const std::string& s) {
  if (s == "identity") return OperatorId::identity;
  if (s == "toeplitz") return OperatorId::toeplitz;
  if (s == "hankel") return OperatorId::hankel;
  if (s == "hilbert") return OperatorId::hilbert_op;
  if (s == "project_plus") return OperatorId::project_plus_op;
  if (s == "commutator") return OperatorId::commutator;
  fail(errc::parse_error, "unknown operator '" + s + "'");
}

SampledFunction analytic_meanzero_part(const SampledFunction& f) {
  SpectralFunction F = forward_fourier(f);
  for (std::size_t i = 0; i < F.grid.N; ++i)
    if (F.grid.bin_of_index(i) <= 0) F.coeffs[i] = 0.0;
  return inverse_fourier(F);
}

namespace {

SampledFunction member_random_band(const FamilySpec& fam, const GridSpec& g,
                                   const ModulationSymbol& sym,
                                   std::uint64_t seed) {
  Rng rng(seed);
  SpectralFunction F = make_spectral(g);
  const double mid = 0.5 * double(fam.lo + fam.hi);
  const double spread = std::max(1.0, double(fam.hi - fam.lo) / 4.0);
  for (long long k = fam.lo; k <= fam.hi; ++k) {
    const double t = (double(k) - mid) / spread;
    F.coeffs[g.bin_index(k)] =
        std::exp(-0.5 * t * t) * rng.next_complex_normal();
  }
  if (fam.lo <= 0 && 0 <= fam.hi) F.coeffs[g.bin_index(0)] = 0.0;
  if (fam.lo <= sym.tau_bins && sym.tau_bins <= fam.hi)
    F.coeffs[g.bin_index(sym.tau_bins)] = 0.0;
  return inverse_fourier(F);
}

SampledFunction member_tones(const FamilySpec& fam, const GridSpec& g,
                             const ModulationSymbol& sym,
                             std::uint64_t seed) {
  Rng rng(seed);
  std::vector<long long> allowed;
  for (long long k = fam.lo; k <= fam.hi; ++k)
    if (k != 0 && k != sym.tau_bins) allowed.push_back(k);
  if (allowed.empty())
    fail(errc::invalid_parameter, "tone family bin range is empty");
  SpectralFunction F = make_spectral(g);
  for (int t = 0; t < 3; ++t) {
    const long long bin =
        allowed[std::size_t(rng.next_int(0, (long long)allowed.size() - 1))];
    F.coeffs[g.bin_index(bin)] += rng.next_complex_normal();
  }
  return inverse_fourier(F);
}

SampledFunction member_atom(const FamilySpec& fam, const GridSpec& g,
                            std::uint64_t seed) {
  Rng rng(seed);
  double len = rng.next_uniform(g.L / 32.0, g.L / 4.0);
  len = std::max(len, 5.0 * g.dx);
  len = std::min(len, 1.6 * g.L);
  const double a = rng.next_uniform(-0.8 * g.L, 0.8 * g.L - len);
  FunctionDescriptor prof;
  prof.kind = (seed & 1ULL) ? FunctionDescriptor::Kind::haar_profile
                            : FunctionDescriptor::Kind::tent_profile;
  prof.a = a;
  prof.b = a + len;
  (void)fam;
  return make_atom(a, a + len, prof, g).values;
}

}  // namespace

SampledFunction family_member(const FamilySpec& fam, const GridSpec& g,
                              const ModulationSymbol& sym,
                              std::size_t trial) {
  const std::uint64_t seed = derive_seed(fam.seed, trial);
  switch (fam.kind) {
    case FamilySpec::Kind::random_band:
      return member_random_band(fam, g, sym, seed);
    case FamilySpec::Kind::tones:
      return member_tones(fam, g, sym, seed);
    case FamilySpec::Kind::atoms:
      return member_atom(fam, g, seed);
    case FamilySpec::Kind::mixed:
      switch (trial % 3) {
        case 0: return member_random_band(fam, g, sym, seed);
        case 1: return member_tones(fam, g, sym, seed);
        default: return member_atom(fam, g, seed);
      }
  }
  fail(errc::invalid_parameter, "unhandled family kind");
}

namespace {

SampledFunction meanzero_part(const SampledFunction& f) {
  SpectralFunction F = forward_fourier(f);
  F.coeffs[F.grid.bin_index(0)] = 0.0;
  return inverse_fourier(F);
}

SampledFunction domain_prep(OperatorId op, const SampledFunction& raw,
                            const ModulationSymbol& sym,
                            const SampledFunction& h0) {
  switch (op) {
    case OperatorId::identity:
      return raw;
    case OperatorId::hilbert_op:
      return meanzero_part(raw);
    case OperatorId::project_plus_op: {
      SampledFunction re = raw;
      for (auto& v : re.values) v = cplx(v.real(), 0.0);
      return meanzero_part(re);
    }
    case OperatorId::toeplitz:
    case OperatorId::hankel:
    case OperatorId::commutator:
      return project_to_h1_theta(analytic_meanzero_part(raw), sym, h0);
  }
  fail(errc::invalid_parameter, "unhandled operator");
}

double ratio_for(OperatorId op, const ModulationSymbol& sym,
                 const SampledFunction& prepped,
                 const SampledFunction& conj_theta, double input_h1) {
  SampledFunction out = [&] {
    switch (op) {
      case OperatorId::identity: return prepped;
      case OperatorId::toeplitz: return toeplitz_apply(sym, prepped);
      case OperatorId::hankel: return hankel_apply(sym, prepped);
      case OperatorId::hilbert_op: return hilbert(prepped);
      case OperatorId::project_plus_op: return project_plus(prepped);
      case OperatorId::commutator:
        return commutator_bH(conj_theta, prepped);
    }
    fail(errc::invalid_parameter, "unhandled operator");
  }();
  const double num =
      op == OperatorId::commutator ? l1_norm(out) : h1_norm(out);
  return num / input_h1;
}

SampledFunction conj_symbol_values(const ModulationSymbol& sym) {
  SampledFunction v = symbol_values(sym);
  for (auto& z : v.values) z = std::conj(z);
  return v;
}

}  // namespace

BoundEstimate estimate_operator_bound(OperatorId op, const FamilySpec& fam,
                                      const std::vector<GridRung>& ladder,
                                      long long tau_bins,
                                      const EstimateOptions& opts) {
  if (ladder.empty()) fail(errc::invalid_parameter, "empty grid ladder");
  BoundEstimate est;
  est.op = std::string("bound:") + operator_name(op);
  est.fam = fam;
  est.tau_bins = tau_bins;

  for (const GridRung& rung : ladder) {
    const GridSpec g = make_grid(rung.L, rung.N);
    const ModulationSymbol sym = make_symbol(g, tau_bins);
    const SampledFunction h0 = default_h0(sym);
    const SampledFunction conj_theta = conj_symbol_values(sym);

    RungEstimate re;
    re.L = rung.L;
    re.N = rung.N;
    re.k = tau_bins;
    re.ratios.assign(fam.size, kNaN);

    parallel_for(fam.size, [&](std::size_t trial) {
      SampledFunction raw = family_member(fam, g, sym, trial);
      SampledFunction f = domain_prep(op, raw, sym, h0);
      const double h1f = h1_norm(f);
      if (h1f < opts.discard_tol) return;
      re.ratios[trial] = ratio_for(op, sym, f, conj_theta, h1f);
    });

    re.sup_random = -1.0;
    for (std::size_t i = 0; i < fam.size; ++i) {
      if (std::isnan(re.ratios[i])) {
        ++re.discarded;
        continue;
      }
      if (re.ratios[i] > re.sup_random) {
        re.sup_random = re.ratios[i];
        re.best_trial = i;
      }
    }
    if (re.discarded == fam.size)
      fail(errc::empty_family, "every family member was discarded");

    // coordinate ascent on the best trial's spectral coefficients
    double cur = re.sup_random;
    SpectralFunction c =
        forward_fourier(family_member(fam, g, sym, re.best_trial));
    const long long span = fam.hi - fam.lo + 1;
    static const cplx kFactors[3] = {
        cplx(1.35, 0.0), cplx(1.0 / 1.35, 0.0),
        cplx(std::sqrt(0.5), std::sqrt(0.5))};
    for (int step = 0; step < opts.refine_steps; ++step) {
      const long long bin = fam.lo + (step % span);
      if (bin == 0 || bin == tau_bins) continue;
      if (bin < g.min_bin() || bin > g.max_bin()) continue;
      double best_cand = cur;
      cplx best_val(0.0, 0.0);
      bool improved = false;
      for (const cplx& m : kFactors) {
        SpectralFunction c2 = c;
        c2.coeffs[g.bin_index(bin)] *= m;
        SampledFunction f2 = domain_prep(op, inverse_fourier(c2), sym, h0);
        const double h1f2 = h1_norm(f2);
        if (h1f2 < opts.discard_tol) continue;
        const double r = ratio_for(op, sym, f2, conj_theta, h1f2);
        if (r > best_cand) {
          best_cand = r;
          best_val = c.coeffs[g.bin_index(bin)] * m;
          improved = true;
        }
      }
      if (improved) {
        c.coeffs[g.bin_index(bin)] = best_val;
        cur = best_cand;
        re.history.push_back(RefineStep{step, bin, cur});
      }
    }
    re.sup_ratio = cur;
    est.rungs.push_back(std::move(re));
  }
  return est;
}

double LadderReport::spread() const {
  if (rungs.empty()) return 0.0;
  double lo = rungs[0].ratio, hi = rungs[0].ratio;
  for (const LadderRung& r : rungs) {
    lo = std::min(lo, r.ratio);
    hi = std::max(hi, r.ratio);
  }
  return lo > 0.0 ? hi / lo - 1.0 : 0.0;
}

LadderReport divergence_ladder(const FunctionDescriptor& input,
                               long long tau_bins,
                               const std::vector<GridRung>& ladder,
                               bool control) {
  if (ladder.size() < 4)
    fail(errc::precondition_violation, "ladder needs at least 4 rungs");
  for (std::size_t i = 1; i < ladder.size(); ++i)
    if (std::abs(ladder[i].L - 2.0 * ladder[i - 1].L) > 1e-9 * ladder[i].L)
      fail(errc::precondition_violation, "ladder rungs must double L");

  LadderReport rep;
  rep.control = control;
  const double L0 = ladder[0].L;

  for (const GridRung& rung : ladder) {
    const GridSpec g = make_grid(rung.L, rung.N);
    // hold tau physical: k scales with L so that tau = k*dxi is constant
    const double scaled = double(tau_bins) * rung.L / L0;
    if (std::abs(scaled - std::round(scaled)) > 1e-9)
      fail(errc::precondition_violation,
           "tau is not representable on this rung");
    const ModulationSymbol sym = make_symbol(g, (long long)std::round(scaled));

    SampledFunction f = analytic_meanzero_part(synthesize(input, g));
    if (control) {
      f = project_to_h1_theta(f, sym);
    } else {
      SpectralFunction F = forward_fourier(f);
      const double at_tau = std::abs(F.coeffs[g.bin_index(sym.tau_bins)]);
      double total = 0.0;
      for (const cplx& cc : F.coeffs) total += std::norm(cc);
      if (at_tau < 1e-3 * std::sqrt(total))
        fail(errc::precondition_violation,
             "input carries no spectral mass at tau");
    }

    LadderRung lr;
    lr.L = rung.L;
    lr.N = rung.N;
    lr.k = sym.tau_bins;
    lr.input_h1 = h1_norm(f);
    lr.output_h1 = h1_norm(toeplitz_apply(sym, f));
    lr.ratio = lr.output_h1 / lr.input_h1;
    rep.rungs.push_back(lr);
  }

  rep.monotone_increasing = true;
  for (std::size_t i = 1; i < rep.rungs.size(); ++i)
    if (!(rep.rungs[i].ratio > rep.rungs[i - 1].ratio))
      rep.monotone_increasing = false;

  // least-squares slope of ratio against ln L
  const std::size_t n = rep.rungs.size();
  double xbar = 0.0, ybar = 0.0;
  for (const LadderRung& r : rep.rungs) {
    xbar += std::log(r.L);
    ybar += r.ratio;
  }
  xbar /= double(n);
  ybar /= double(n);
  double sxy = 0.0, sxx = 0.0;
  for (const LadderRung& r : rep.rungs) {
    sxy += (std::log(r.L) - xbar) * (r.ratio - ybar);
    sxx += (std::log(r.L) - xbar) * (std::log(r.L) - xbar);
  }
  rep.slope_vs_logL = sxx > 0.0 ? sxy / sxx : 0.0;
  return rep;
}

BoundEstimate decomposition_constant(const FamilySpec& fam,
                                     const std::vector<GridRung>& ladder,
                                     long long tau_bins) {
  if (ladder.empty()) fail(errc::invalid_parameter, "empty grid ladder");
  BoundEstimate est;
  est.op = "decompose-const";
  est.fam = fam;
  est.tau_bins = tau_bins;

  for (const GridRung& rung : ladder) {
    const GridSpec g = make_grid(rung.L, rung.N);
    const ModulationSymbol sym = make_symbol(g, tau_bins);
    const SampledFunction h0 = default_h0(sym);

    RungEstimate re;
    re.L = rung.L;
    re.N = rung.N;
    re.k = tau_bins;
    re.ratios.assign(fam.size, kNaN);
    std::vector<double> recon(fam.size, 0.0);
    std::vector<double> tri(fam.size,
                            -std::numeric_limits<double>::infinity());

    parallel_for(fam.size, [&](std::size_t trial) {
      SampledFunction raw = family_member(fam, g, sym, trial);
      SampledFunction f =
          project_to_h1_theta(analytic_meanzero_part(raw), sym, h0);
      const double h1f = h1_norm(f);
      if (h1f < 1e-8) return;
      BandDecomposition d = band_decompose(f, sym);

      SampledFunction sum = d.kernel_part;
      for (std::size_t j = 0; j < g.N; ++j)
        sum.values[j] += d.shifted_part.values[j] - f.values[j];
      recon[trial] = l1_norm(sum) / l1_norm(f);

      const double parts = h1_norm(d.kernel_part) + h1_norm(d.shifted_part);
      tri[trial] = h1f - parts;
      re.ratios[trial] = parts / h1f;
    });

    re.sup_random = -1.0;
    double worst_recon = 0.0;
    double worst_tri = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < fam.size; ++i) {
      if (std::isnan(re.ratios[i])) {
        ++re.discarded;
        continue;
      }
      if (re.ratios[i] > re.sup_random) {
        re.sup_random = re.ratios[i];
        re.best_trial = i;
      }
      worst_recon = std::max(worst_recon, recon[i]);
      worst_tri = std::max(worst_tri, tri[i]);
    }
    if (re.discarded == fam.size)
      fail(errc::empty_family, "every family member was discarded");
    re.sup_ratio = re.sup_random;
    re.diagnostics["max_reconstruction_error"] = worst_recon;
    re.diagnostics["max_triangle_violation"] = worst_tri;
    est.rungs.push_back(std::move(re));
  }
  return est;
}

namespace {

SampledFunction rand_spectral_band(const GridSpec& g, Rng& rng, long long lo,
                                   long long hi, long long skip1 = 1,
                                   long long skip2 = 1) {
  SpectralFunction F = make_spectral(g);
  for (long long k = lo; k <= hi; ++k) {
    const cplx z = rng.next_complex_normal();
    if (k == skip1 || k == skip2) continue;
    F.coeffs[g.bin_index(k)] = z;
  }
  return inverse_fourier(F);
}

SampledFunction rand_values(const GridSpec& g, Rng& rng) {
  SampledFunction f = make_function(g);
  for (auto& v : f.values) v = rng.next_complex_normal();
  return f;
}

}  // namespace

IdentityReport identity_suite(const GridSpec& g, const ModulationSymbol& sym,
                              std::uint64_t seed) {
  IdentityReport rep;
  rep.L = g.L;
  rep.N = g.N;
  rep.k = sym.tau_bins;
  rep.seed = seed;
  const long long k = sym.tau_bins;
  const long long top = std::min<long long>(400, g.max_bin() - 2 * k - 2);
  if (top < k + 2)
    fail(errc::invalid_parameter, "grid too small for the identity battery");
  const SampledFunction conj_theta = conj_symbol_values(sym);
  const double tol = 1e-10;

  auto add = [&](const std::string& name, double residual) {
    rep.results.push_back(
        IdentityResult{name, residual, tol, residual <= tol});
  };

  auto sub = [&](const SampledFunction& a, const SampledFunction& b) {
    SampledFunction out = a;
    for (std::size_t j = 0; j < out.values.size(); ++j)
      out.values[j] -= b.values[j];
    return out;
  };

  {  // P+ + P- = Id and idempotence
    double worst_part = 0.0, worst_idem = 0.0;
    for (int t = 0; t < 10; ++t) {
      Rng rng(derive_seed(seed, 100 + t));
      SampledFunction f = rand_values(g, rng);
      SampledFunction plus = project_plus(f);
      SampledFunction minus = project_minus(f);
      SampledFunction sum = plus;
      for (std::size_t j = 0; j < g.N; ++j)
        sum.values[j] += minus.values[j] - f.values[j];
      worst_part = std::max(worst_part, l1_norm(sum) / l1_norm(f));
      worst_idem = std::max(
          worst_idem, l1_norm(sub(project_plus(plus), plus)) / l1_norm(f));
      worst_idem = std::max(
          worst_idem, l1_norm(sub(project_minus(minus), minus)) / l1_norm(f));
    }
    add("projection_partition", worst_part);
    add("projection_idempotent", worst_idem);
  }

  {  // Hilbert identities on mean-zero members
    double worst_proj = 0.0, worst_invol = 0.0;
    for (int t = 0; t < 10; ++t) {
      Rng rng(derive_seed(seed, 200 + t));
      SampledFunction f = meanzero_part(rand_values(g, rng));
      SampledFunction hf = hilbert(f);
      SampledFunction plus = project_plus(f);
      SampledFunction minus = project_minus(f);
      SampledFunction alt = make_function(g);
      for (std::size_t j = 0; j < g.N; ++j)
        alt.values[j] =
            cplx(0.0, -1.0) * (plus.values[j] - minus.values[j]);
      worst_proj = std::max(worst_proj, l1_norm(sub(hf, alt)) / l1_norm(f));
      SampledFunction hh = hilbert(hf);
      for (std::size_t j = 0; j < g.N; ++j) hh.values[j] += f.values[j];
      worst_invol = std::max(worst_invol, l1_norm(hh) / l1_norm(f));
    }
    add("hilbert_via_projections", worst_proj);
    add("hilbert_involution", worst_invol);
  }

  {  // adjoint identity <T f, g> = <f, Theta g> on analytic pairs
    double worst = 0.0;
    for (int t = 0; t < 50; ++t) {
      Rng rng(derive_seed(seed, 300 + t));
      SampledFunction f = rand_spectral_band(g, rng, 0, top, -1, -1);
      SampledFunction ga = rand_spectral_band(g, rng, 0, top, -1, -1);
      SampledFunction theta_g = modulate(ga, k);
      const cplx lhs = pairing(toeplitz_apply(sym, f), ga);
      const cplx rhs = pairing(f, theta_g);
      worst = std::max(worst,
                       std::abs(lhs - rhs) / (l2_of(f) * l2_of(ga)));
    }
    add("toeplitz_adjoint", worst);
  }

  {  // T(Theta g) = g
    double worst = 0.0;
    for (int t = 0; t < 10; ++t) {
      Rng rng(derive_seed(seed, 400 + t));
      SampledFunction ga = rand_spectral_band(g, rng, 1, top, -1, -1);
      SampledFunction back = toeplitz_apply(sym, modulate(ga, k));
      worst = std::max(worst, l1_norm(sub(back, ga)) / l1_norm(ga));
    }
    add("toeplitz_range", worst);
  }

  if (k >= 2) {  // T vanishes on the model-space band [1, k-1]
    double worst = 0.0;
    for (int t = 0; t < 10; ++t) {
      Rng rng(derive_seed(seed, 500 + t));
      SampledFunction f = rand_spectral_band(g, rng, 1, k - 1, -1, -1);
      worst = std::max(worst,
                       h1_norm(toeplitz_apply(sym, f)) / h1_norm(f));
    }
    add("toeplitz_kernel", worst);
  }

  {  // T + H = M_{conj Theta}
    double worst = 0.0;
    for (int t = 0; t < 10; ++t) {
      Rng rng(derive_seed(seed, 600 + t));
      SampledFunction f = rand_spectral_band(g, rng, 1, top, -1, -1);
      SampledFunction both = toeplitz_apply(sym, f);
      SampledFunction hank = hankel_apply(sym, f);
      SampledFunction prod = multiply(conj_theta, f);
      for (std::size_t j = 0; j < g.N; ++j)
        both.values[j] += hank.values[j] - prod.values[j];
      worst = std::max(worst, l1_norm(both) / l1_norm(f));
    }
    add("hankel_complementarity", worst);
  }

  {  // [conj Theta, H] vanishes on conjugate-analytic members
    double worst = 0.0;
    for (int t = 0; t < 10; ++t) {
      Rng rng(derive_seed(seed, 700 + t));
      SampledFunction f1 = rand_spectral_band(g, rng, -top, -1, 1, 1);
      worst = std::max(
          worst, l1_norm(commutator_bH(conj_theta, f1)) / l1_norm(f1));
    }
    add("commutator_antianalytic", worst);
  }

  {  // [conj Theta, H] = -2i Hankel on the H1_Theta model
    double worst = 0.0;
    for (int t = 0; t < 10; ++t) {
      Rng rng(derive_seed(seed, 800 + t));
      SampledFunction f2 = rand_spectral_band(g, rng, 1, top, k, k);
      SampledFunction comm = commutator_bH(conj_theta, f2);
      SampledFunction hank = hankel_apply(sym, f2);
      for (std::size_t j = 0; j < g.N; ++j)
        comm.values[j] += cplx(0.0, 2.0) * hank.values[j];
      worst = std::max(worst, l1_norm(comm) / l1_norm(f2));
    }
    add("commutator_h1theta", worst);
  }

  {  // linearity of P+, H, T on random analytic triples
    double worst = 0.0;
    for (int t = 0; t < 10; ++t) {
      Rng rng(derive_seed(seed, 900 + t));
      SampledFunction f = rand_spectral_band(g, rng, 1, top, -1, -1);
      SampledFunction h = rand_spectral_band(g, rng, 1, top, -1, -1);
      const cplx alpha = rng.next_complex_normal();
      const cplx beta = rng.next_complex_normal();
      SampledFunction combo = make_function(g);
      for (std::size_t j = 0; j < g.N; ++j)
        combo.values[j] = alpha * f.values[j] + beta * h.values[j];
      const auto check = [&](auto&& apply) {
        SampledFunction lhs = apply(combo);
        SampledFunction rf = apply(f);
        SampledFunction rh = apply(h);
        for (std::size_t j = 0; j < g.N; ++j)
          lhs.values[j] -= alpha * rf.values[j] + beta * rh.values[j];
        worst = std::max(worst, l1_norm(lhs) / l1_norm(combo));
      };
      check([](const SampledFunction& u) { return project_plus(u); });
      check([](const SampledFunction& u) { return hilbert(u); });
      check([&](const SampledFunction& u) {
        return toeplitz_apply(sym, u);
      });
    }
    add("operator_linearity", worst);
  }

  rep.all_pass = true;
  for (const IdentityResult& r : rep.results)
    if (!r.pass) rep.all_pass = false;
  return rep;
}

}  // namespace hardyline
