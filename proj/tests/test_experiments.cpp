#include <doctest.h>

#include <cstdlib>
#include <cmath>

#include "hardyline/experiments.hpp"
#include "hardyline/parallel.hpp"

using namespace hardyline;

namespace {

bool bitwise_equal(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].real() != b[i].real() || a[i].imag() != b[i].imag())
      return false;
  return true;
}

}  // namespace

TEST_CASE("family members are bitwise reproducible and trial-independent") {
  const GridSpec g = make_grid(64.0, 4096);
  const ModulationSymbol sym = make_symbol(g, 8);
  FamilySpec fam;
  fam.seed = 99;

  const SampledFunction a = family_member(fam, g, sym, 17);
  const SampledFunction b = family_member(fam, g, sym, 17);
  CHECK(bitwise_equal(a.values, b.values));

  const SampledFunction c = family_member(fam, g, sym, 18);
  CHECK(!bitwise_equal(a.values, c.values));

  // Spectral generators avoid bins 0 and k by construction.
  const SpectralFunction A = forward_fourier(a);
  CHECK(std::abs(A.coeffs[g.bin_index(0)]) < 1e-13);
  CHECK(std::abs(A.coeffs[g.bin_index(8)]) < 1e-13);
}

TEST_CASE("estimate_operator_bound reports ratio 1 for the identity") {
  FamilySpec fam;
  fam.size = 10;
  const std::vector<GridRung> ladder = {{32.0, 2048}};
  const BoundEstimate est =
      estimate_operator_bound(OperatorId::identity, fam, ladder, 8);
  REQUIRE(est.rungs.size() == 1);
  for (double r : est.rungs[0].ratios) {
    if (std::isnan(r)) continue;
    CHECK(r == doctest::Approx(1.0).epsilon(1e-12));
  }
  CHECK(est.rungs[0].sup_ratio >= est.rungs[0].sup_random);
}

TEST_CASE("bound estimates are deterministic across thread counts") {
  FamilySpec fam;
  fam.size = 12;
  const std::vector<GridRung> ladder = {{32.0, 2048}};
  EstimateOptions opts;
  opts.refine_steps = 5;

  setenv("HARDYLINE_THREADS", "1", 1);
  const BoundEstimate serial =
      estimate_operator_bound(OperatorId::toeplitz, fam, ladder, 8, opts);
  setenv("HARDYLINE_THREADS", "4", 1);
  const BoundEstimate parallel =
      estimate_operator_bound(OperatorId::toeplitz, fam, ladder, 8, opts);
  unsetenv("HARDYLINE_THREADS");

  REQUIRE(serial.rungs.size() == parallel.rungs.size());
  for (std::size_t i = 0; i < serial.rungs[0].ratios.size(); ++i) {
    const double a = serial.rungs[0].ratios[i];
    const double b = parallel.rungs[0].ratios[i];
    if (std::isnan(a)) {
      CHECK(std::isnan(b));
    } else {
      CHECK(a == b);
    }
  }
  CHECK(serial.rungs[0].sup_ratio == parallel.rungs[0].sup_ratio);
  CHECK(serial.rungs[0].best_trial == parallel.rungs[0].best_trial);
}

TEST_CASE("refinement never loses to the random stage") {
  FamilySpec fam;
  fam.size = 8;
  const std::vector<GridRung> ladder = {{32.0, 2048}};
  for (OperatorId op : {OperatorId::toeplitz, OperatorId::hankel,
                        OperatorId::hilbert_op, OperatorId::commutator}) {
    const BoundEstimate est = estimate_operator_bound(op, fam, ladder, 8);
    CHECK(est.rungs[0].sup_ratio >= est.rungs[0].sup_random);
    for (std::size_t i = 1; i < est.rungs[0].history.size(); ++i)
      CHECK(est.rungs[0].history[i].ratio >
            est.rungs[0].history[i - 1].ratio);
  }
}

TEST_CASE("divergence ladder validates its input and geometry") {
  FunctionDescriptor input;
  input.kind = FunctionDescriptor::Kind::gaussian_band;
  input.center = 8.0 * (3.14159265358979323846 / 64.0);
  input.width = input.center / 3.0;

  // Too few rungs.
  CHECK_THROWS_AS(
      (void)divergence_ladder(input, 8, {{64, 4096}, {128, 8192}}), Error);
  // Non-doubling ladder.
  const std::vector<GridRung> crooked = {
      {64, 4096}, {100, 6400}, {200, 12800}, {400, 25600}};
  CHECK_THROWS_AS((void)divergence_ladder(input, 8, crooked), Error);

  // An input with no spectral mass at tau is rejected outside control mode.
  FunctionDescriptor off;
  off.kind = FunctionDescriptor::Kind::gaussian_band;
  off.center = 40.0 * (3.14159265358979323846 / 64.0);
  off.width = 0.02;
  const std::vector<GridRung> ladder = {
      {64, 4096}, {128, 8192}, {256, 16384}, {512, 32768}};
  CHECK_THROWS_AS((void)divergence_ladder(off, 8, ladder), Error);
  try {
    (void)divergence_ladder(off, 8, ladder);
  } catch (const Error& e) {
    CHECK(e.code() == errc::precondition_violation);
  }
}

TEST_CASE("divergence ladder grows on-symbol and flattens off-symbol") {
  FunctionDescriptor input;
  input.kind = FunctionDescriptor::Kind::gaussian_band;
  const double tau = 8.0 * (3.14159265358979323846 / 64.0);
  input.center = tau;
  input.width = tau / 3.0;
  const std::vector<GridRung> ladder = {
      {64, 4096}, {128, 8192}, {256, 16384}, {512, 32768}};

  const LadderReport divergent = divergence_ladder(input, 8, ladder, false);
  REQUIRE(divergent.rungs.size() == 4);
  CHECK(divergent.monotone_increasing);
  CHECK(divergent.slope_vs_logL > 0.1);
  CHECK(divergent.rungs[1].k == 16);
  CHECK(divergent.rungs[3].k == 64);

  const LadderReport control = divergence_ladder(input, 8, ladder, true);
  CHECK(control.spread() < 0.10);
}

TEST_CASE("decomposition constant is exactly 1 for kernel-only families") {
  FamilySpec fam;
  fam.size = 6;
  fam.lo = 1;
  fam.hi = 7;  // strictly below the symbol frequency
  const std::vector<GridRung> ladder = {{32.0, 2048}};
  const BoundEstimate est = decomposition_constant(fam, ladder, 8);
  REQUIRE(est.rungs.size() == 1);
  for (double r : est.rungs[0].ratios) {
    if (std::isnan(r)) continue;
    CHECK(r == doctest::Approx(1.0).epsilon(1e-10));
  }
  CHECK(est.rungs[0].diagnostics.at("max_reconstruction_error") < 1e-12);
}

TEST_CASE("identity suite passes at the reference configuration") {
  const GridSpec g = make_grid(64.0, 4096);
  const ModulationSymbol sym = make_symbol(g, 8);
  const IdentityReport rep = identity_suite(g, sym, 1);
  CHECK(rep.all_pass);
  CHECK(rep.results.size() >= 10);
  for (const IdentityResult& r : rep.results) {
    CHECK(r.pass);
    CHECK(r.residual <= 1e-10);
  }

  // Too little spectral headroom for the battery is refused.
  const GridSpec tiny = make_grid(4.0, 32);
  CHECK_THROWS_AS((void)identity_suite(tiny, make_symbol(tiny, 8), 1), Error);
}

TEST_CASE("ladder spread helper") {
  LadderReport rep;
  rep.rungs.resize(2);
  rep.rungs[0].ratio = 1.0;
  rep.rungs[1].ratio = 1.25;
  CHECK(rep.spread() == doctest::Approx(0.25));
}

TEST_CASE("name lookups roundtrip and reject junk") {
  CHECK(operator_from_name(operator_name(OperatorId::toeplitz)) ==
        OperatorId::toeplitz);
  CHECK(operator_from_name(operator_name(OperatorId::commutator)) ==
        OperatorId::commutator);
  CHECK_THROWS_AS((void)operator_from_name("frobnicate"), Error);
  CHECK(family_kind_from_name(family_kind_name(FamilySpec::Kind::tones)) ==
        FamilySpec::Kind::tones);
  CHECK_THROWS_AS((void)family_kind_from_name("junk"), Error);
}

TEST_CASE("parallel_for covers every index exactly once") {
  setenv("HARDYLINE_THREADS", "3", 1);
  std::vector<int> hits(1000, 0);
  parallel_for(hits.size(), [&](std::size_t i) { hits[i] += 1; });
  unsetenv("HARDYLINE_THREADS");
  for (int h : hits) CHECK(h == 1);

  // Exceptions from workers surface to the caller.
  CHECK_THROWS_AS(
      parallel_for(8, [](std::size_t i) {
        if (i == 5) throw std::runtime_error("boom");
      }),
      std::runtime_error);
}
