#include "hardyline/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace hardyline {

using nlohmann::json;

namespace {

json cplx_to_json(const cplx& z) { return json::array({z.real(), z.imag()}); }

cplx cplx_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2)
    fail(errc::parse_error, "complex values must be [re, im] pairs");
  return cplx(j[0].get<double>(), j[1].get<double>());
}

json values_to_json(const std::vector<cplx>& v) {
  json arr = json::array();
  for (const cplx& z : v) arr.push_back(cplx_to_json(z));
  return arr;
}

std::vector<cplx> values_from_json(const json& j) {
  if (!j.is_array()) fail(errc::parse_error, "values must be an array");
  std::vector<cplx> out;
  out.reserve(j.size());
  for (const json& e : j) out.push_back(cplx_from_json(e));
  return out;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

json to_json(const GridSpec& g) {
  return json{{"L", g.L}, {"N", g.N}};
}

GridSpec grid_from_json(const json& j) {
  if (!j.contains("L") || !j.contains("N"))
    fail(errc::parse_error, "grid header must contain L and N");
  return make_grid(j.at("L").get<double>(), j.at("N").get<std::size_t>());
}

json to_json(const SampledFunction& f) {
  return json{{"schema_version", kSchemaVersion},
              {"grid", to_json(f.grid)},
              {"values", values_to_json(f.values)}};
}

SampledFunction function_from_json(const json& j) {
  if (!j.contains("grid") || !j.contains("values"))
    fail(errc::parse_error, "function document needs grid and values");
  SampledFunction f;
  f.grid = grid_from_json(j.at("grid"));
  f.values = values_from_json(j.at("values"));
  if (f.values.size() != f.grid.N)
    fail(errc::parse_error, "values length does not match grid N");
  return f;
}

json to_json(const FunctionDescriptor& d) {
  using K = FunctionDescriptor::Kind;
  json j{{"kind", kind_name(d.kind)}};
  switch (d.kind) {
    case K::pure_tone:
      if (d.sigma_in_bins)
        j["sigma_bins"] = (long long)std::llround(d.sigma);
      else
        j["sigma"] = d.sigma;
      break;
    case K::gaussian_space:
      j["center"] = d.center;
      j["width"] = d.width;
      break;
    case K::gaussian_band:
      j["center"] = d.center;
      j["bandwidth"] = d.width;
      break;
    case K::cauchy_sq:
      break;
    case K::haar_profile:
    case K::tent_profile:
      j["interval"] = json::array({d.a, d.b});
      break;
    case K::random_band:
      j["bins"] = json::array({d.lo, d.hi});
      j["seed"] = d.seed;
      break;
    case K::combination: {
      json terms = json::array();
      for (const auto& t : d.terms) terms.push_back(to_json(t));
      json weights = json::array();
      for (const cplx& w : d.weights) weights.push_back(cplx_to_json(w));
      j["terms"] = std::move(terms);
      j["weights"] = std::move(weights);
      break;
    }
  }
  return j;
}

FunctionDescriptor descriptor_from_json(const json& j) {
  using K = FunctionDescriptor::Kind;
  if (!j.contains("kind"))
    fail(errc::parse_error, "descriptor must contain a kind tag");
  FunctionDescriptor d;
  d.kind = kind_from_name(j.at("kind").get<std::string>());
  switch (d.kind) {
    case K::pure_tone:
      if (j.contains("sigma_bins")) {
        d.sigma = double(j.at("sigma_bins").get<long long>());
        d.sigma_in_bins = true;
      } else if (j.contains("sigma")) {
        d.sigma = j.at("sigma").get<double>();
      } else {
        fail(errc::parse_error, "pure_tone needs sigma or sigma_bins");
      }
      break;
    case K::gaussian_space:
      d.center = j.at("center").get<double>();
      d.width = j.at("width").get<double>();
      break;
    case K::gaussian_band:
      d.center = j.at("center").get<double>();
      d.width = j.at("bandwidth").get<double>();
      break;
    case K::cauchy_sq:
      break;
    case K::haar_profile:
    case K::tent_profile:
      if (j.contains("interval")) {
        d.a = j.at("interval").at(0).get<double>();
        d.b = j.at("interval").at(1).get<double>();
      } else {
        d.a = j.at("a").get<double>();
        d.b = j.at("b").get<double>();
      }
      break;
    case K::random_band:
      if (j.contains("bins")) {
        d.lo = j.at("bins").at(0).get<long long>();
        d.hi = j.at("bins").at(1).get<long long>();
      } else {
        d.lo = j.at("lo").get<long long>();
        d.hi = j.at("hi").get<long long>();
      }
      d.seed = j.at("seed").get<std::uint64_t>();
      break;
    case K::combination: {
      if (!j.contains("terms") || !j.contains("weights"))
        fail(errc::parse_error, "combination needs terms and weights");
      for (const json& t : j.at("terms"))
        d.terms.push_back(descriptor_from_json(t));
      for (const json& w : j.at("weights"))
        d.weights.push_back(cplx_from_json(w));
      break;
    }
  }
  return d;
}

json to_json(const Atom& a) {
  return json{{"schema_version", kSchemaVersion},
              {"grid", to_json(a.values.grid)},
              {"interval", json::array({a.a, a.b})},
              {"values", values_to_json(a.values.values)}};
}

json to_json(const MembershipReport& r) {
  return json{{"schema_version", kSchemaVersion},
              {"negative_bin_fraction", r.negative_bin_fraction},
              {"bin0_fraction", r.bin0_fraction},
              {"boundary_tail_fraction", r.boundary_tail_fraction}};
}

json to_json(const BandDecomposition& d, long long tau_bins) {
  return json{{"schema_version", kSchemaVersion},
              {"tau_bins", tau_bins},
              {"kernel_bins", json::array({1, tau_bins - 1})},
              {"shifted_bins_from", tau_bins + 1},
              {"residual_mass", d.residual_mass},
              {"kernel_part", to_json(d.kernel_part)},
              {"shifted_part", to_json(d.shifted_part)}};
}

json to_json(const BoundEstimate& est) {
  json rungs = json::array();
  for (const RungEstimate& r : est.rungs) {
    json ratios = json::array();
    for (double v : r.ratios)
      ratios.push_back(std::isnan(v) ? json() : json(v));
    json history = json::array();
    for (const RefineStep& s : r.history)
      history.push_back(
          json{{"step", s.step}, {"bin", s.bin}, {"ratio", s.ratio}});
    json diag = json::object();
    for (const auto& [key, value] : r.diagnostics) diag[key] = value;
    rungs.push_back(json{{"L", r.L},
                         {"N", r.N},
                         {"k", r.k},
                         {"ratios", std::move(ratios)},
                         {"discarded", r.discarded},
                         {"best_trial", r.best_trial},
                         {"sup_random", r.sup_random},
                         {"sup_ratio", r.sup_ratio},
                         {"refinement", std::move(history)},
                         {"diagnostics", std::move(diag)}});
  }
  return json{{"schema_version", kSchemaVersion},
              {"experiment", est.op},
              {"tau_bins", est.tau_bins},
              {"family",
               json{{"kind", family_kind_name(est.fam.kind)},
                    {"bins", json::array({est.fam.lo, est.fam.hi})},
                    {"size", est.fam.size},
                    {"seed", est.fam.seed}}},
              {"rungs", std::move(rungs)}};
}

json to_json(const LadderReport& rep) {
  json rungs = json::array();
  for (const LadderRung& r : rep.rungs)
    rungs.push_back(json{{"L", r.L},
                         {"N", r.N},
                         {"k", r.k},
                         {"input_h1", r.input_h1},
                         {"output_h1", r.output_h1},
                         {"ratio", r.ratio}});
  return json{{"schema_version", kSchemaVersion},
              {"experiment", rep.control ? "diverge-control" : "diverge"},
              {"rungs", std::move(rungs)},
              {"monotone_increasing", rep.monotone_increasing},
              {"slope_vs_logL", rep.slope_vs_logL},
              {"spread", rep.spread()}};
}

json to_json(const IdentityReport& rep) {
  json results = json::array();
  for (const IdentityResult& r : rep.results)
    results.push_back(json{{"name", r.name},
                           {"residual", r.residual},
                           {"tol", r.tol},
                           {"pass", r.pass}});
  return json{{"schema_version", kSchemaVersion},
              {"experiment", "identities"},
              {"L", rep.L},
              {"N", rep.N},
              {"k", rep.k},
              {"seed", rep.seed},
              {"results", std::move(results)},
              {"all_pass", rep.all_pass}};
}

std::string csv_header() { return "experiment,L,N,k,trial,ratio,sup_ratio,flag\n"; }

std::string csv_for_bound(const BoundEstimate& est, double rung_growth_tol) {
  std::ostringstream out;
  out << csv_header();
  double prev_sup = -1.0;
  for (const RungEstimate& r : est.rungs) {
    const bool stable =
        prev_sup < 0.0 || r.sup_ratio <= (1.0 + rung_growth_tol) * prev_sup;
    for (std::size_t t = 0; t < r.ratios.size(); ++t) {
      if (std::isnan(r.ratios[t])) continue;
      out << est.op << ',' << fmt(r.L) << ',' << r.N << ',' << r.k << ','
          << t << ',' << fmt(r.ratios[t]) << ',' << fmt(r.sup_ratio) << ','
          << (stable ? 1 : 0) << '\n';
    }
    prev_sup = r.sup_ratio;
  }
  return out.str();
}

std::string csv_for_ladders(const LadderReport& divergent,
                            const LadderReport& control, double flat_tol) {
  std::ostringstream out;
  out << csv_header();
  const auto emit = [&](const LadderReport& rep, const char* name,
                        bool flag) {
    double sup = 0.0;
    for (const LadderRung& r : rep.rungs) sup = std::max(sup, r.ratio);
    std::size_t idx = 0;
    for (const LadderRung& r : rep.rungs) {
      out << name << ',' << fmt(r.L) << ',' << r.N << ',' << r.k << ','
          << idx++ << ',' << fmt(r.ratio) << ',' << fmt(sup) << ','
          << (flag ? 1 : 0) << '\n';
    }
  };
  emit(divergent, "diverge", divergent.monotone_increasing);
  emit(control, "diverge-control", control.spread() <= flat_tol);
  return out.str();
}

std::string csv_for_identities(const IdentityReport& rep) {
  std::ostringstream out;
  out << csv_header();
  double sup = 0.0;
  for (const IdentityResult& r : rep.results)
    sup = std::max(sup, r.residual);
  for (std::size_t i = 0; i < rep.results.size(); ++i) {
    const IdentityResult& r = rep.results[i];
    out << "identities:" << r.name << ',' << fmt(rep.L) << ',' << rep.N
        << ',' << rep.k << ',' << i << ',' << fmt(r.residual) << ','
        << fmt(sup) << ',' << (r.pass ? 1 : 0) << '\n';
  }
  return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(errc::io_error, "cannot open '" + path + "' for writing");
  out << content;
  if (!out) fail(errc::io_error, "write failed for '" + path + "'");
}

json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::io_error, "cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail(errc::parse_error, std::string("invalid JSON: ") + e.what());
  }
  return j;
}

}  // namespace hardyline
