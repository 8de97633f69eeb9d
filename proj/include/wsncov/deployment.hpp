#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "wsncov/connectivity_rules.hpp"
#include "wsncov/coverage_model.hpp"
#include "wsncov/geometry.hpp"

namespace wsncov {

using NodeId = std::size_t;

struct Node {
    NodeId id = 0;
    Point position;
    double sensing_radius = 0.0;

    friend bool operator==(const Node&, const Node&) = default;
};

// A realized topology: the node set, the lattice side that generated it and
// the field it covers. Immutable once built.
class Deployment {
public:
    Deployment(SensingField field, double spacing, double sensing_radius, std::vector<Node> nodes,
               std::optional<NodeId> base_station = std::nullopt);

    const SensingField& field() const { return field_; }
    double spacing() const { return spacing_; }
    double sensing_radius() const { return sensing_radius_; }
    const std::vector<Node>& nodes() const { return nodes_; }
    std::size_t size() const { return nodes_.size(); }
    bool empty() const { return nodes_.empty(); }
    std::optional<NodeId> base_station() const { return base_station_; }

    // Copy with the node nearest the field centroid designated as base
    // station; ties go to the lowest id.
    Deployment with_base_station() const;

    friend bool operator==(const Deployment&, const Deployment&) = default;

private:
    SensingField field_;
    double spacing_;
    double sensing_radius_;
    std::vector<Node> nodes_;
    std::optional<NodeId> base_station_;
};

// Triangular lattice of side d anchored at the field origin. Rows are
// (sqrt(3)/2) d apart, odd rows shifted by d/2, and only centers inside the
// closed field rectangle are kept. Ids run in row-major order.
Deployment generate_triangular_lattice(const SensingField& field, double d, double rs);

struct CoveragePlan {
    double requested_alpha = 0.0;
    SpacingSolution solution;
    CommRadiusBound rc_bound;
    Deployment deployment;
    std::size_t node_count = 0;
    double predicted_alpha = 0.0;
};

CoveragePlan plan_deployment(const SensingField& field, double alpha, double rs,
                             bool designate_base_station = false);

}  // namespace wsncov
