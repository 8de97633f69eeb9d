#pragma once

#include <string>

#include <json.hpp>

#include "wsncov/coverage_model.hpp"
#include "wsncov/deployment.hpp"
#include "wsncov/verification.hpp"

namespace wsncov {

// Header of the lookup-table CSV. Values are written with 12 significant digits.
inline constexpr const char* kLookupCsvHeader = "alpha,beta,d_over_Rs,Rc_min_over_Rs";

std::string lookup_table_csv(const LookupTable& table);
nlohmann::json lookup_table_json(const LookupTable& table);

// {field:{width,height}, spacing, rs, nodes:[{id,x,y}], base_station_id}
nlohmann::json deployment_json(const Deployment& dep);
std::string deployment_csv(const Deployment& dep);

// Accepts a deployment document or a plan document (whose "deployment" key
// holds one). Throws DomainError on schema violations.
Deployment deployment_from_json(const nlohmann::json& doc);

nlohmann::json plan_json(const CoveragePlan& plan);

// {alpha_hat, n, ci95, mode, window}
nlohmann::json estimate_json(const CoverageEstimate& estimate);

// {connected, components, rc}
nlohmann::json connectivity_json(const ConnectivityReport& report);

}  // namespace wsncov
