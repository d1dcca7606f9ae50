#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hardyline/serialize.hpp"

using namespace hardyline;
using nlohmann::json;

namespace {

struct CommonArgs {
  double L = 64.0;
  std::size_t N = 4096;
  long long tau_bins = 8;
  std::string input;
  std::string descriptor;
  std::string output;
  std::string out_dir = "reports";
  bool force = false;
  int threads = 0;
};

SampledFunction load_input(const CommonArgs& args) {
  if (!args.input.empty()) {
    json j = read_json_file(args.input);
    if (j.contains("kind"))
      return synthesize(descriptor_from_json(j), make_grid(args.L, args.N));
    return function_from_json(j);
  }
  if (!args.descriptor.empty()) {
    json j;
    try {
      j = json::parse(args.descriptor);
    } catch (const std::exception& e) {
      fail(errc::parse_error, std::string("bad descriptor: ") + e.what());
    }
    return synthesize(descriptor_from_json(j), make_grid(args.L, args.N));
  }
  fail(errc::invalid_parameter, "provide --input or --descriptor");
}

void write_function_with_sidecar(const SampledFunction& f,
                                 const std::string& path) {
  write_text_file(path, to_json(f).dump(2) + "\n");
  write_text_file(path + ".membership.json",
                  to_json(membership_report(f)).dump(2) + "\n");
}

std::vector<GridRung> parse_ladder(const std::string& text,
                                   double samples_per_unit) {
  std::vector<GridRung> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    GridRung r;
    const auto colon = item.find(':');
    if (colon == std::string::npos) {
      r.L = std::stod(item);
      r.N = std::size_t(std::llround(r.L * samples_per_unit));
    } else {
      r.L = std::stod(item.substr(0, colon));
      r.N = std::stoull(item.substr(colon + 1));
    }
    out.push_back(r);
  }
  if (out.empty()) fail(errc::invalid_parameter, "empty ladder");
  return out;
}

void ensure_dir(const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) fail(errc::io_error, "cannot create directory '" + dir + "'");
}

json run_config_json(const std::string& command, const CommonArgs& args,
                     const json& extra) {
  json j{{"schema_version", kSchemaVersion},
         {"command", command},
         {"grid", json{{"L", args.L}, {"N", args.N}}},
         {"tau_bins", args.tau_bins}};
  for (const auto& [key, value] : extra.items()) j[key] = value;
  return j;
}

int cmd_apply(const CommonArgs& args, const std::string& op,
              const std::string& b_input, double r_scale, double reg_R,
              double reg_eps, long long shift) {
  SampledFunction f = load_input(args);
  SampledFunction out = [&] {
    if (op == "hilbert") return hilbert(f);
    if (op == "project-plus") return project_plus(f);
    if (op == "project-minus") return project_minus(f);
    if (op == "toeplitz")
      return toeplitz_apply(make_symbol(f.grid, args.tau_bins), f,
                            args.force);
    if (op == "hankel")
      return hankel_apply(make_symbol(f.grid, args.tau_bins), f, args.force);
    if (op == "smooth-lowpass") return smooth_lowpass(f, r_scale);
    if (op == "band-regularize") return band_regularize(f, reg_R, reg_eps);
    if (op == "modulate") return modulate(f, shift, args.force);
    if (op == "project-h1theta")
      return project_to_h1_theta(f, make_symbol(f.grid, args.tau_bins));
    if (op == "commutator") {
      if (b_input.empty())
        fail(errc::invalid_parameter, "commutator needs --b-input");
      return commutator_bH(function_from_json(read_json_file(b_input)), f);
    }
    fail(errc::invalid_parameter, "unknown operator '" + op + "'");
  }();
  const std::string path = args.output.empty() ? "out.json" : args.output;
  write_function_with_sidecar(out, path);
  std::cout << "wrote " << path << " (l1=" << l1_norm(out) << ")\n";
  return 0;
}

int cmd_norm(const CommonArgs& args, int depth) {
  SampledFunction f = load_input(args);
  const MembershipReport rep = membership_report(f);
  if (rep.bin0_fraction > 1e-8)
    std::cout << "note: input has nonzero mean (bin-0 fraction "
              << rep.bin0_fraction << "); H1 norm is nominal\n";
  int d = depth;
  if (d <= 0) {
    d = 1;
    while ((std::size_t(1) << (d + 1)) <= std::min<std::size_t>(f.grid.N, 4096))
      ++d;
  }
  const BmoEstimate bmo = bmo_estimate(f, d);
  std::cout << "l1 = " << l1_norm(f) << "\n"
            << "h1 = " << h1_norm(f) << "\n"
            << "bmo = " << bmo.value << " (depth " << bmo.depth
            << ", witness [" << bmo.witness_a << ", " << bmo.witness_b
            << "])\n"
            << "diagnostics = " << to_json(rep).dump() << "\n";
  if (!args.output.empty()) {
    json doc{{"schema_version", kSchemaVersion},
             {"l1", l1_norm(f)},
             {"h1", h1_norm(f)},
             {"bmo", bmo.value},
             {"bmo_depth", bmo.depth},
             {"diagnostics", to_json(rep)}};
    write_text_file(args.output, doc.dump(2) + "\n");
  }
  return 0;
}

int cmd_decompose(const CommonArgs& args) {
  SampledFunction f = load_input(args);
  const ModulationSymbol sym = make_symbol(f.grid, args.tau_bins);
  const BandDecomposition d = band_decompose(f, sym);
  const std::string path =
      args.output.empty() ? "decomposition.json" : args.output;
  write_text_file(path, to_json(d, args.tau_bins).dump(2) + "\n");
  const double h1f = h1_norm(f);
  const double parts = h1_norm(d.kernel_part) + h1_norm(d.shifted_part);
  std::cout << "wrote " << path << "\n"
            << "residual_mass = " << d.residual_mass << "\n"
            << "h1(f) = " << h1f << ", h1(f1)+h1(f2) = " << parts
            << ", ratio = " << parts / h1f << "\n";
  return 0;
}

int cmd_make_atom(const CommonArgs& args, const std::string& interval_text,
                  const std::string& profile_kind,
                  const std::string& profile_json,
                  const std::string& profile2_kind,
                  const std::string& b_input) {
  const auto comma = interval_text.find(',');
  if (comma == std::string::npos)
    fail(errc::invalid_parameter, "--interval expects 'a,b'");
  const double a = std::stod(interval_text.substr(0, comma));
  const double b = std::stod(interval_text.substr(comma + 1));

  const auto profile_for = [&](const std::string& kind) {
    FunctionDescriptor d;
    if (kind == "haar")
      d.kind = FunctionDescriptor::Kind::haar_profile;
    else if (kind == "tent")
      d.kind = FunctionDescriptor::Kind::tent_profile;
    else
      fail(errc::invalid_parameter, "profile kind must be haar or tent");
    d.a = a;
    d.b = b;
    return d;
  };
  FunctionDescriptor prof = profile_json.empty()
                                ? profile_for(profile_kind)
                                : descriptor_from_json(
                                      json::parse(profile_json));

  Atom atom = [&] {
    if (b_input.empty())
      return make_atom(a, b, prof, make_grid(args.L, args.N));
    SampledFunction bf = function_from_json(read_json_file(b_input));
    return make_b_atom(a, b, bf, prof, profile_for(profile2_kind));
  }();

  const std::string path = args.output.empty() ? "atom.json" : args.output;
  write_text_file(path, to_json(atom).dump(2) + "\n");

  SampledFunction ind = make_function(atom.values.grid);
  for (std::size_t j = 0; j < ind.grid.N; ++j) {
    const double x = ind.grid.x(j);
    if (x >= atom.a && x < atom.b) ind.values[j] = 1.0;
  }
  double sup = 0.0;
  for (const cplx& v : atom.values.values) sup = std::max(sup, std::abs(v));
  std::cout << "wrote " << path << "\n"
            << "mean pairing = " << std::abs(pairing(atom.values, ind))
            << ", sup*|I| = " << sup * atom.length() << "\n";
  return 0;
}

int cmd_experiment_identities(const CommonArgs& args, std::uint64_t seed) {
  const GridSpec g = make_grid(args.L, args.N);
  const ModulationSymbol sym = make_symbol(g, args.tau_bins);
  const IdentityReport rep = identity_suite(g, sym, seed);
  ensure_dir(args.out_dir);
  write_text_file(args.out_dir + "/identities.json",
                  to_json(rep).dump(2) + "\n");
  write_text_file(args.out_dir + "/identities.csv", csv_for_identities(rep));
  write_text_file(args.out_dir + "/config.json",
                  run_config_json("experiment identities", args,
                                  json{{"seed", seed}})
                          .dump(2) +
                      "\n");
  for (const IdentityResult& r : rep.results)
    std::cout << (r.pass ? "pass" : "FAIL") << "  " << r.name
              << "  residual=" << r.residual << "\n";
  std::cout << (rep.all_pass ? "identity suite: all pass\n"
                             : "identity suite: FAILURES\n");
  return rep.all_pass ? 0 : 4;
}

int cmd_experiment_bound(const CommonArgs& args, const std::string& op_name,
                         const std::string& ladder_text, std::size_t trials,
                         std::uint64_t seed, const std::string& bins_text,
                         int refine_steps, double growth_tol) {
  FamilySpec fam;
  fam.size = trials;
  fam.seed = seed;
  if (!bins_text.empty()) {
    const auto comma = bins_text.find(',');
    if (comma == std::string::npos)
      fail(errc::invalid_parameter, "--bins expects 'lo,hi'");
    fam.lo = std::stoll(bins_text.substr(0, comma));
    fam.hi = std::stoll(bins_text.substr(comma + 1));
  }
  const std::vector<GridRung> ladder =
      parse_ladder(ladder_text, double(args.N) / args.L);
  EstimateOptions opts;
  opts.refine_steps = refine_steps;
  const BoundEstimate est = estimate_operator_bound(
      operator_from_name(op_name), fam, ladder, args.tau_bins, opts);

  ensure_dir(args.out_dir);
  write_text_file(args.out_dir + "/bound.json", to_json(est).dump(2) + "\n");
  write_text_file(args.out_dir + "/bound.csv",
                  csv_for_bound(est, growth_tol));
  write_text_file(
      args.out_dir + "/config.json",
      run_config_json("experiment bound", args,
                      json{{"op", op_name},
                           {"trials", trials},
                           {"seed", seed},
                           {"bins", json::array({fam.lo, fam.hi})},
                           {"refine_steps", refine_steps},
                           {"growth_tol", growth_tol},
                           {"ladder", ladder_text}})
              .dump(2) +
          "\n");

  bool stable = true;
  for (std::size_t i = 0; i < est.rungs.size(); ++i) {
    const RungEstimate& r = est.rungs[i];
    std::cout << "rung L=" << r.L << " N=" << r.N
              << " sup_ratio=" << r.sup_ratio << " (random " << r.sup_random
              << ", " << r.history.size() << " ascent steps)\n";
    if (i > 0 &&
        r.sup_ratio > (1.0 + growth_tol) * est.rungs[i - 1].sup_ratio)
      stable = false;
  }
  std::cout << (stable ? "bound estimate: stable across rungs\n"
                       : "bound estimate: rung growth exceeds tolerance\n");
  return 0;
}

int cmd_experiment_diverge(const CommonArgs& args,
                           const std::string& ladder_text, double center,
                           double bandwidth, double flat_tol) {
  const std::vector<GridRung> ladder =
      parse_ladder(ladder_text, double(args.N) / args.L);
  const GridSpec base = make_grid(ladder[0].L, ladder[0].N);
  const double tau = base.xi(args.tau_bins);

  FunctionDescriptor input;
  input.kind = FunctionDescriptor::Kind::gaussian_band;
  input.center = center > 0.0 ? center : tau;
  input.width = bandwidth > 0.0 ? bandwidth : tau / 3.0;

  const LadderReport divergent =
      divergence_ladder(input, args.tau_bins, ladder, false);
  const LadderReport control =
      divergence_ladder(input, args.tau_bins, ladder, true);

  ensure_dir(args.out_dir);
  json doc{{"schema_version", kSchemaVersion},
           {"divergent", to_json(divergent)},
           {"control", to_json(control)}};
  write_text_file(args.out_dir + "/diverge.json", doc.dump(2) + "\n");
  write_text_file(args.out_dir + "/diverge.csv",
                  csv_for_ladders(divergent, control, flat_tol));
  write_text_file(
      args.out_dir + "/config.json",
      run_config_json("experiment diverge", args,
                      json{{"center", input.center},
                           {"bandwidth", input.width},
                           {"flat_tol", flat_tol},
                           {"ladder", ladder_text}})
              .dump(2) +
          "\n");

  for (const LadderRung& r : divergent.rungs)
    std::cout << "diverge  L=" << r.L << " k=" << r.k
              << " ratio=" << r.ratio << "\n";
  for (const LadderRung& r : control.rungs)
    std::cout << "control  L=" << r.L << " k=" << r.k
              << " ratio=" << r.ratio << "\n";
  std::cout << "divergent monotone: "
            << (divergent.monotone_increasing ? "yes" : "NO")
            << ", slope vs log L = " << divergent.slope_vs_logL << "\n"
            << "control spread: " << control.spread()
            << (control.spread() <= flat_tol ? " (flat)" : " (NOT flat)")
            << "\n";
  return 0;
}

int cmd_experiment_decompose(const CommonArgs& args,
                             const std::string& ladder_text,
                             std::size_t trials, std::uint64_t seed,
                             double stability_tol) {
  FamilySpec fam;
  fam.size = trials;
  fam.seed = seed;
  const std::vector<GridRung> ladder =
      parse_ladder(ladder_text, double(args.N) / args.L);
  const BoundEstimate est =
      decomposition_constant(fam, ladder, args.tau_bins);

  ensure_dir(args.out_dir);
  write_text_file(args.out_dir + "/decompose_const.json",
                  to_json(est).dump(2) + "\n");
  write_text_file(args.out_dir + "/decompose_const.csv",
                  csv_for_bound(est, stability_tol));
  write_text_file(args.out_dir + "/config.json",
                  run_config_json("experiment decompose-const", args,
                                  json{{"trials", trials},
                                       {"seed", seed},
                                       {"stability_tol", stability_tol},
                                       {"ladder", ladder_text}})
                          .dump(2) +
                      "\n");

  for (const RungEstimate& r : est.rungs)
    std::cout << "rung L=" << r.L << " sup_ratio=" << r.sup_ratio
              << " max_recon="
              << r.diagnostics.at("max_reconstruction_error")
              << " max_triangle="
              << r.diagnostics.at("max_triangle_violation") << "\n";
  double lo = est.rungs.front().sup_ratio, hi = lo;
  for (const RungEstimate& r : est.rungs) {
    lo = std::min(lo, r.sup_ratio);
    hi = std::max(hi, r.sup_ratio);
  }
  std::cout << "equivalence constant spread: " << hi / lo - 1.0
            << (hi / lo - 1.0 <= stability_tol ? " (stable)" : " (UNSTABLE)")
            << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "hardyline: Hardy-space operator calculus on a discretized line"};
  app.require_subcommand(1);

  CommonArgs args;
  std::string op_name, b_input, interval_text, profile_kind = "haar";
  std::string profile_json, profile2_kind = "tent";
  std::string bound_op = "toeplitz";
  std::string ladder_rungs = "64:4096,128:8192,256:16384";
  std::string ladder_Ls = "64,128,256,512";
  std::string bins_text;
  double r_scale = 1.0, reg_R = 8.0, reg_eps = 0.125;
  double center = 0.0, bandwidth = 0.0;
  double growth_tol = 0.10, flat_tol = 0.10, stability_tol = 0.10;
  long long shift = 0;
  std::uint64_t id_seed = 1, fam_seed = 42;
  std::size_t trials = 200;
  int refine_steps = 200, depth = 0;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--L", args.L, "grid half-length");
    sub->add_option("--N", args.N, "sample count (power of two)");
    sub->add_option("--tau-bins", args.tau_bins, "symbol frequency in bins");
    sub->add_option("--threads", args.threads, "worker thread cap");
    sub->add_flag("--force", args.force, "override the wraparound guard");
  };

  CLI::App* apply = app.add_subcommand("apply", "apply an operator");
  add_common(apply);
  apply->add_option("--op", op_name, "operator name")->required();
  apply->add_option("--input", args.input, "function or descriptor JSON file");
  apply->add_option("--descriptor", args.descriptor, "inline descriptor JSON");
  apply->add_option("--output", args.output, "output path");
  apply->add_option("--b-input", b_input, "symbol function for commutator");
  apply->add_option("--r", r_scale, "smooth_lowpass scale");
  apply->add_option("--R", reg_R, "band_regularize upper scale");
  apply->add_option("--eps", reg_eps, "band_regularize lower scale");
  apply->add_option("--shift", shift, "modulate shift in bins");

  CLI::App* norm = app.add_subcommand("norm", "print norms and diagnostics");
  add_common(norm);
  norm->add_option("--input", args.input, "function or descriptor JSON file");
  norm->add_option("--descriptor", args.descriptor, "inline descriptor JSON");
  norm->add_option("--output", args.output, "optional JSON output path");
  norm->add_option("--depth", depth, "bmo dyadic depth");

  CLI::App* decomp = app.add_subcommand("decompose", "band decomposition");
  add_common(decomp);
  decomp->add_option("--input", args.input, "function or descriptor JSON");
  decomp->add_option("--descriptor", args.descriptor, "inline descriptor");
  decomp->add_option("--output", args.output, "output path");

  CLI::App* matom = app.add_subcommand("make-atom", "generate an atom");
  add_common(matom);
  matom->add_option("--interval", interval_text, "'a,b'")->required();
  matom->add_option("--profile-kind", profile_kind, "haar or tent");
  matom->add_option("--profile", profile_json, "profile descriptor JSON");
  matom->add_option("--profile2-kind", profile2_kind,
                    "second profile for b-atoms");
  matom->add_option("--b-input", b_input, "b function file (makes a b-atom)");
  matom->add_option("--output", args.output, "output path");

  CLI::App* exp = app.add_subcommand("experiment", "run an experiment");
  exp->require_subcommand(1);

  CLI::App* exp_id = exp->add_subcommand("identities", "identity suite");
  add_common(exp_id);
  exp_id->add_option("--seed", id_seed, "family seed")
      ->capture_default_str();
  exp_id->add_option("--out", args.out_dir, "report directory");

  CLI::App* exp_bound = exp->add_subcommand("bound", "operator bound");
  add_common(exp_bound);
  exp_bound->add_option("--op", bound_op, "operator id")
      ->capture_default_str();
  exp_bound->add_option("--trials", trials, "family size");
  exp_bound->add_option("--seed", fam_seed, "family master seed")
      ->capture_default_str();
  exp_bound->add_option("--bins", bins_text, "family bin range 'lo,hi'");
  exp_bound->add_option("--ladder", ladder_rungs, "L:N list")
      ->capture_default_str();
  exp_bound->add_option("--refine", refine_steps, "ascent step cap");
  exp_bound->add_option("--growth-tol", growth_tol, "rung growth tolerance");
  exp_bound->add_option("--out", args.out_dir, "report directory");

  CLI::App* exp_div = exp->add_subcommand("diverge", "divergence ladder");
  add_common(exp_div);
  exp_div->add_option("--ladder", ladder_Ls, "L list (N defaults to 64L)")
      ->capture_default_str();
  exp_div->add_option("--center", center, "input band center (default tau)");
  exp_div->add_option("--bandwidth", bandwidth,
                      "input bandwidth (default tau/3)");
  exp_div->add_option("--flat-tol", flat_tol, "control flatness tolerance");
  exp_div->add_option("--out", args.out_dir, "report directory");

  CLI::App* exp_dec =
      exp->add_subcommand("decompose-const", "equivalence constant");
  add_common(exp_dec);
  exp_dec->add_option("--trials", trials, "family size");
  exp_dec->add_option("--seed", fam_seed, "family master seed")
      ->capture_default_str();
  exp_dec->add_option("--ladder", ladder_rungs, "L:N list")
      ->capture_default_str();
  exp_dec->add_option("--stability-tol", stability_tol,
                      "rung stability tolerance");
  exp_dec->add_option("--out", args.out_dir, "report directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (args.threads > 0) {
    const std::string v = std::to_string(args.threads);
    setenv("HARDYLINE_THREADS", v.c_str(), 1);
  }

  try {
    if (app.got_subcommand(apply))
      return cmd_apply(args, op_name, b_input, r_scale, reg_R, reg_eps,
                       shift);
    if (app.got_subcommand(norm)) return cmd_norm(args, depth);
    if (app.got_subcommand(decomp)) return cmd_decompose(args);
    if (app.got_subcommand(matom))
      return cmd_make_atom(args, interval_text, profile_kind, profile_json,
                           profile2_kind, b_input);
    if (app.got_subcommand(exp)) {
      if (exp->got_subcommand(exp_id))
        return cmd_experiment_identities(args, id_seed);
      if (exp->got_subcommand(exp_bound))
        return cmd_experiment_bound(args, bound_op, ladder_rungs, trials,
                                    fam_seed, bins_text, refine_steps,
                                    growth_tol);
      if (exp->got_subcommand(exp_div))
        return cmd_experiment_diverge(args, ladder_Ls, center, bandwidth,
                                      flat_tol);
      if (exp->got_subcommand(exp_dec))
        return cmd_experiment_decompose(args, ladder_rungs, trials, fam_seed,
                                        stability_tol);
    }
    fail(errc::invalid_parameter, "no command selected");
  } catch (const Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return err.code() == errc::wraparound_risk ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
