#include "hardyline/spaces.hpp"

#include <algorithm>
#include <cmath>

namespace hardyline {

namespace {
constexpr double kSqrt2Pi = 2.5066282746310002;
}

double h1_norm(const SampledFunction& f) {
  return l1_norm(f) + l1_norm(hilbert(f));
}

cplx inner_pairing_with_theta(const SampledFunction& f,
                              const ModulationSymbol& sym) {
  require_same_grid(f.grid, sym.grid, "inner_pairing_with_theta");
  const GridSpec& g = f.grid;
  const double tau = sym.tau();
  cplx s(0.0, 0.0);
  for (std::size_t j = 0; j < g.N; ++j) {
    const double ph = tau * g.x(j);
    s += f.values[j] * cplx(std::cos(ph), -std::sin(ph));
  }
  return g.dx * s;
}

SampledFunction default_h0(const ModulationSymbol& sym) {
  const GridSpec& g = sym.grid;
  const long long k = sym.tau_bins;
  if (2 * k > g.max_bin())
    fail(errc::invalid_parameter,
         "default h0 needs bins up to 2k inside the grid band");
  SpectralFunction H = make_spectral(g);
  const double w = std::max(0.5, double(k) / 4.0);
  for (long long b = 1; b <= 2 * k; ++b) {
    const double t = double(b - k) / w;
    H.coeffs[g.bin_index(b)] = std::exp(-0.5 * t * t);
  }
  // <h0, Theta> = sqrt(2 pi) * coeff[k]; normalize it to exactly 1
  const cplx at_k = H.coeffs[g.bin_index(k)];
  const cplx scale = 1.0 / (kSqrt2Pi * at_k);
  for (auto& c : H.coeffs) c *= scale;
  return inverse_fourier(H);
}

SampledFunction project_to_h1_theta(const SampledFunction& f,
                                    const ModulationSymbol& sym,
                                    const SampledFunction& h0) {
  require_same_grid(f.grid, sym.grid, "project_to_h1_theta");
  require_same_grid(h0.grid, sym.grid, "project_to_h1_theta");
  const cplx norm = inner_pairing_with_theta(h0, sym);
  if (std::abs(norm - 1.0) > 1e-10)
    fail(errc::bad_normalizer, "<h0, Theta> must equal 1 within 1e-10");
  const cplx coef = inner_pairing_with_theta(f, sym);
  SampledFunction out = f;
  for (std::size_t j = 0; j < f.grid.N; ++j)
    out.values[j] -= coef * h0.values[j];
  return out;
}

SampledFunction project_to_h1_theta(const SampledFunction& f,
                                    const ModulationSymbol& sym) {
  return project_to_h1_theta(f, sym, default_h0(sym));
}

BandDecomposition band_decompose(const SampledFunction& f,
                                 const ModulationSymbol& sym, double tol) {
  require_same_grid(f.grid, sym.grid, "band_decompose");
  const GridSpec& g = f.grid;
  const long long k = sym.tau_bins;
  SpectralFunction F = forward_fourier(f);

  double total = 0.0, negative = 0.0;
  for (std::size_t i = 0; i < g.N; ++i) {
    const double m = std::norm(F.coeffs[i]);
    total += m;
    if (g.bin_of_index(i) < 0) negative += m;
  }
  const double scale = std::sqrt(total);
  if (scale > 0.0) {
    if (std::sqrt(negative) > tol * scale)
      fail(errc::not_in_subspace, "input is not analytic within tolerance");
    if (std::abs(F.coeffs[g.bin_index(0)]) > tol * scale)
      fail(errc::not_in_subspace, "input has nonvanishing mean");
    if (std::abs(F.coeffs[g.bin_index(k)]) > tol * scale)
      fail(errc::not_in_subspace, "input has nonvanishing bin-k coefficient");
  }

  SpectralFunction kern = make_spectral(g);
  SpectralFunction shift = make_spectral(g);
  double residual = 0.0;
  for (std::size_t i = 0; i < g.N; ++i) {
    const long long bin = g.bin_of_index(i);
    if (bin >= 1 && bin <= k - 1)
      kern.coeffs[i] = F.coeffs[i];
    else if (bin >= k + 1)
      shift.coeffs[i] = F.coeffs[i];
    else
      residual += std::norm(F.coeffs[i]);
  }
  BandDecomposition out;
  out.kernel_part = inverse_fourier(kern);
  out.shifted_part = inverse_fourier(shift);
  out.residual_mass = std::sqrt(g.dxi * residual);
  return out;
}

namespace {

// Two-pass discrete mean removal over the in-interval samples; leaves the
// sample sum at true roundoff level.
void remove_mean_on(std::vector<cplx>& v, const std::vector<std::size_t>& idx) {
  for (int pass = 0; pass < 2; ++pass) {
    cplx s(0.0, 0.0);
    for (std::size_t j : idx) s += v[j];
    const cplx m = s / double(idx.size());
    for (std::size_t j : idx) v[j] -= m;
  }
}

std::vector<std::size_t> interval_indices(const GridSpec& g, double a,
                                          double b) {
  std::vector<std::size_t> idx;
  for (std::size_t j = 0; j < g.N; ++j) {
    const double x = g.x(j);
    if (x >= a && x < b) idx.push_back(j);
  }
  return idx;
}

void check_interval(const GridSpec& g, double a, double b) {
  if (!(b > a)) fail(errc::invalid_parameter, "empty interval");
  if (a < -g.L || b > g.L)
    fail(errc::invalid_parameter, "interval outside [-L, L]");
}

// Windowed profile shapes are always drawn over the atom's own interval;
// other descriptor kinds are synthesized globally and restricted.
FunctionDescriptor rebind_window(const FunctionDescriptor& profile, double a,
                                 double b) {
  FunctionDescriptor prof = profile;
  if (prof.kind == FunctionDescriptor::Kind::haar_profile ||
      prof.kind == FunctionDescriptor::Kind::tent_profile) {
    prof.a = a;
    prof.b = b;
  }
  return prof;
}

}  // namespace

Atom make_atom(double a, double b, const FunctionDescriptor& profile,
               const GridSpec& g) {
  check_interval(g, a, b);
  if (b - a < 4.0 * g.dx)
    fail(errc::interval_too_small, "atom interval must span at least 4 dx");
  const std::vector<std::size_t> idx = interval_indices(g, a, b);
  if (idx.empty()) fail(errc::interval_too_small, "no samples inside interval");

  SampledFunction raw = synthesize(rebind_window(profile, a, b), g);
  SampledFunction v = make_function(g);
  for (std::size_t j : idx) v.values[j] = raw.values[j];

  remove_mean_on(v.values, idx);

  double sup = 0.0;
  for (std::size_t j : idx) sup = std::max(sup, std::abs(v.values[j]));
  if (sup == 0.0)
    fail(errc::invalid_parameter, "profile vanishes on the interval");
  const double scale = 1.0 / (sup * (b - a));
  for (std::size_t j : idx) v.values[j] *= scale;

  return Atom{a, b, std::move(v)};
}

Atom make_b_atom(double a, double b, const SampledFunction& b_fn,
                 const FunctionDescriptor& profile1,
                 const FunctionDescriptor& profile2) {
  const GridSpec& g = b_fn.grid;
  check_interval(g, a, b);
  if (b - a < 4.0 * g.dx)
    fail(errc::interval_too_small, "atom interval must span at least 4 dx");
  const std::vector<std::size_t> idx = interval_indices(g, a, b);
  if (idx.empty()) fail(errc::interval_too_small, "no samples inside interval");

  // When b_fn does not vary on I the orthogonality constraint coincides with
  // the mean constraint and the 2x2 system is singular by construction.
  double sup_b = 0.0;
  for (std::size_t j : idx) sup_b = std::max(sup_b, std::abs(b_fn.values[j]));
  if (oscillation_on(b_fn, a, b) <= 1e-10 * (1.0 + sup_b))
    return make_atom(a, b, profile1, g);

  SampledFunction q1 = make_function(g);
  SampledFunction q2 = make_function(g);
  {
    SampledFunction r1 = synthesize(rebind_window(profile1, a, b), g);
    SampledFunction r2 = synthesize(rebind_window(profile2, a, b), g);
    for (std::size_t j : idx) {
      q1.values[j] = r1.values[j];
      q2.values[j] = r2.values[j];
    }
  }
  SampledFunction ind = make_function(g);
  for (std::size_t j : idx) ind.values[j] = 1.0;

  // a = q1 + beta q2 + gamma 1_I with <a, 1_I> = <a, b_fn> = 0
  const cplx m11 = pairing(q2, ind), m12 = pairing(ind, ind);
  const cplx m21 = pairing(q2, b_fn), m22 = pairing(ind, b_fn);
  const cplx r1 = -pairing(q1, ind), r2 = -pairing(q1, b_fn);

  const cplx det = m11 * m22 - m12 * m21;
  // exact 2-norm condition number of the 2x2 system via its singular values
  const double fro2 = std::norm(m11) + std::norm(m12) + std::norm(m21) +
                      std::norm(m22);
  const double root = std::sqrt(std::max(
      0.0, fro2 * fro2 - 4.0 * std::norm(det)));
  const double smax2 = 0.5 * (fro2 + root);
  const double smin2 = 0.5 * (fro2 - root);
  if (!(smin2 > 0.0) || std::sqrt(smax2 / smin2) > 1e6)
    fail(errc::degenerate_profiles,
         "profile pair is ill-conditioned against (1, b)");

  const cplx beta = (r1 * m22 - r2 * m12) / det;
  const cplx gamma = (m11 * r2 - m21 * r1) / det;

  SampledFunction v = make_function(g);
  for (std::size_t j : idx)
    v.values[j] = q1.values[j] + beta * q2.values[j] + gamma * ind.values[j];

  double sup = 0.0;
  for (std::size_t j : idx) sup = std::max(sup, std::abs(v.values[j]));
  double sup_q1 = 0.0;
  for (std::size_t j : idx) sup_q1 = std::max(sup_q1, std::abs(q1.values[j]));
  if (sup <= 1e-12 * (1.0 + sup_q1))
    fail(errc::degenerate_profiles,
         "profiles collapse under the constraints");
  const double scale = 1.0 / (sup * (b - a));
  for (std::size_t j : idx) v.values[j] *= scale;

  return Atom{a, b, std::move(v)};
}

double oscillation_on(const SampledFunction& psi, double a, double b) {
  check_interval(psi.grid, a, b);
  const std::vector<std::size_t> idx = interval_indices(psi.grid, a, b);
  if (idx.empty())
    fail(errc::invalid_parameter, "no samples inside interval");
  cplx s(0.0, 0.0);
  for (std::size_t j : idx) s += psi.values[j];
  const cplx mean = s / double(idx.size());
  double dev = 0.0;
  for (std::size_t j : idx) dev += std::abs(psi.values[j] - mean);
  return psi.grid.dx * dev / (b - a);
}

BmoEstimate bmo_estimate(const SampledFunction& psi, int depth) {
  const GridSpec& g = psi.grid;
  if (depth < 1) fail(errc::invalid_parameter, "depth must be at least 1");
  if ((std::size_t(1) << depth) > g.N)
    fail(errc::invalid_parameter, "2^depth must not exceed N");

  BmoEstimate best;
  best.depth = depth;
  // Dyadic intervals split exactly at sample boundaries: at depth d each
  // interval holds N/2^d consecutive samples.
  for (int d = 0; d <= depth; ++d) {
    const std::size_t pieces = std::size_t(1) << d;
    const std::size_t span = g.N / pieces;
    const double len = 2.0 * g.L / double(pieces);
    for (std::size_t p = 0; p < pieces; ++p) {
      cplx s(0.0, 0.0);
      for (std::size_t j = p * span; j < (p + 1) * span; ++j)
        s += psi.values[j];
      const cplx mean = s / double(span);
      double dev = 0.0;
      for (std::size_t j = p * span; j < (p + 1) * span; ++j)
        dev += std::abs(psi.values[j] - mean);
      const double osc = g.dx * dev / len;
      if (osc > best.value) {
        best.value = osc;
        best.witness_a = -g.L + double(p) * len;
        best.witness_b = best.witness_a + len;
      }
    }
  }
  return best;
}

MembershipReport membership_report(const SampledFunction& f) {
  const GridSpec& g = f.grid;
  SpectralFunction F = forward_fourier(f);
  double total = 0.0, negative = 0.0;
  for (std::size_t i = 0; i < g.N; ++i) {
    const double m = std::norm(F.coeffs[i]);
    total += m;
    if (g.bin_of_index(i) < 0) negative += m;
  }
  MembershipReport rep;
  if (total > 0.0) {
    rep.negative_bin_fraction = std::sqrt(negative / total);
    rep.bin0_fraction =
        std::abs(F.coeffs[g.bin_index(0)]) / std::sqrt(total);
  }
  double l1 = 0.0, tail = 0.0;
  for (std::size_t j = 0; j < g.N; ++j) {
    const double m = std::abs(f.values[j]);
    l1 += m;
    if (std::abs(g.x(j)) > 0.9 * g.L) tail += m;
  }
  if (l1 > 0.0) rep.boundary_tail_fraction = tail / l1;
  return rep;
}

}  // namespace hardyline
