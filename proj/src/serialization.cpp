#include "wsncov/serialization.hpp"

#include <fmt/format.h>

#include <utility>
#include <vector>

#include "wsncov/error.hpp"

namespace wsncov {

using nlohmann::json;

std::string lookup_table_csv(const LookupTable& table) {
    std::string out = kLookupCsvHeader;
    out += '\n';
    for (const LookupRow& row : table.rows) {
        out += fmt::format("{:.12g},{:.12g},{:.12g},{:.12g}\n", row.alpha, row.beta,
                           row.spacing_over_rs, row.rc_min_over_rs);
    }
    return out;
}

json lookup_table_json(const LookupTable& table) {
    json rows = json::array();
    for (const LookupRow& row : table.rows) {
        rows.push_back({{"alpha", row.alpha},
                        {"beta", row.beta},
                        {"d_over_Rs", row.spacing_over_rs},
                        {"Rc_min_over_Rs", row.rc_min_over_rs}});
    }
    return rows;
}

json deployment_json(const Deployment& dep) {
    json field = {{"width", dep.field().width()}, {"height", dep.field().height()}};
    if (dep.field().origin() != Point{}) {
        field["origin"] = {{"x", dep.field().origin().x}, {"y", dep.field().origin().y}};
    }
    json nodes = json::array();
    for (const Node& node : dep.nodes()) {
        nodes.push_back({{"id", node.id}, {"x", node.position.x}, {"y", node.position.y}});
    }
    json doc = {{"field", std::move(field)},
                {"spacing", dep.spacing()},
                {"rs", dep.sensing_radius()},
                {"nodes", std::move(nodes)}};
    doc["base_station_id"] = dep.base_station() ? json(*dep.base_station()) : json(nullptr);
    return doc;
}

std::string deployment_csv(const Deployment& dep) {
    std::string out = "id,x,y\n";
    for (const Node& node : dep.nodes()) {
        out += fmt::format("{},{},{}\n", node.id, node.position.x, node.position.y);
    }
    return out;
}

Deployment deployment_from_json(const json& doc) {
    if (doc.is_object() && doc.contains("deployment")) {
        return deployment_from_json(doc.at("deployment"));
    }
    try {
        const json& field_doc = doc.at("field");
        Point origin;
        if (field_doc.contains("origin")) {
            origin = {field_doc.at("origin").at("x").get<double>(),
                      field_doc.at("origin").at("y").get<double>()};
        }
        const SensingField field(field_doc.at("width").get<double>(),
                                 field_doc.at("height").get<double>(), origin);
        const double rs = doc.at("rs").get<double>();

        std::vector<Node> nodes;
        for (const json& node_doc : doc.at("nodes")) {
            nodes.push_back({node_doc.at("id").get<NodeId>(),
                             {node_doc.at("x").get<double>(), node_doc.at("y").get<double>()},
                             rs});
        }
        std::optional<NodeId> base_station;
        if (doc.contains("base_station_id") && !doc.at("base_station_id").is_null()) {
            base_station = doc.at("base_station_id").get<NodeId>();
        }
        return Deployment(field, doc.at("spacing").get<double>(), rs, std::move(nodes), base_station);
    } catch (const json::exception& e) {
        throw DomainError(std::string("malformed deployment document: ") + e.what());
    }
}

json plan_json(const CoveragePlan& plan) {
    return {{"requested_alpha", plan.requested_alpha},
            {"predicted_alpha", plan.predicted_alpha},
            {"beta", plan.solution.beta},
            {"spacing", plan.solution.spacing},
            {"regime", std::string(to_string(plan.solution.regime))},
            {"rs", plan.deployment.sensing_radius()},
            {"rc_min", plan.rc_bound.rc_min},
            {"capped_by_diameter", plan.rc_bound.capped_by_diameter},
            {"field_diameter", field_diameter(plan.deployment.field())},
            {"node_count", plan.node_count},
            {"deployment", deployment_json(plan.deployment)}};
}

json estimate_json(const CoverageEstimate& estimate) {
    return {{"alpha_hat", estimate.fraction},
            {"n", estimate.sample_count},
            {"ci95", estimate.half_width_95},
            {"mode", std::string(to_string(estimate.mode))},
            {"window", std::string(to_string(estimate.window))}};
}

json connectivity_json(const ConnectivityReport& report) {
    return {{"connected", report.connected}, {"components", report.components}, {"rc", report.rc}};
}

}  // namespace wsncov
