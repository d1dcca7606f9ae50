#pragma once

#include <string>

#include <json.hpp>

#include "hardyline/experiments.hpp"

namespace hardyline {

inline constexpr int kSchemaVersion = 1;

nlohmann::json to_json(const GridSpec& g);
GridSpec grid_from_json(const nlohmann::json& j);

/// {"schema_version":1, "grid":{"L":..,"N":..}, "values":[[re,im],...]}
nlohmann::json to_json(const SampledFunction& f);
SampledFunction function_from_json(const nlohmann::json& j);

nlohmann::json to_json(const FunctionDescriptor& d);
FunctionDescriptor descriptor_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Atom& a);
nlohmann::json to_json(const MembershipReport& r);
nlohmann::json to_json(const BandDecomposition& d, long long tau_bins);
nlohmann::json to_json(const BoundEstimate& est);
nlohmann::json to_json(const LadderReport& rep);
nlohmann::json to_json(const IdentityReport& rep);

/// Flat tables share one column set: experiment,L,N,k,trial,ratio,sup_ratio,flag
std::string csv_header();
std::string csv_for_bound(const BoundEstimate& est, double rung_growth_tol);
std::string csv_for_ladders(const LadderReport& divergent,
                            const LadderReport& control, double flat_tol);
std::string csv_for_identities(const IdentityReport& rep);

void write_text_file(const std::string& path, const std::string& content);
nlohmann::json read_json_file(const std::string& path);

}  // namespace hardyline
