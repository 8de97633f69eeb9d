#include "wsncov/deployment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

#include "wsncov/error.hpp"

namespace wsncov {

Deployment::Deployment(SensingField field, double spacing, double sensing_radius,
                       std::vector<Node> nodes, std::optional<NodeId> base_station)
    : field_(field),
      spacing_(spacing),
      sensing_radius_(sensing_radius),
      nodes_(std::move(nodes)),
      base_station_(base_station) {
    if (!(spacing > 0.0) || !(sensing_radius > 0.0)) {
        throw DomainError("spacing and sensing radius must be positive");
    }
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (nodes_[i].id != i) {
            throw DomainError("node ids must be 0..n-1 in order");
        }
        if (!std::isfinite(nodes_[i].position.x) || !std::isfinite(nodes_[i].position.y)) {
            throw DomainError("node coordinates must be finite");
        }
        if (!(nodes_[i].sensing_radius > 0.0)) {
            throw DomainError("node sensing radius must be positive");
        }
    }
    if (base_station_ && *base_station_ >= nodes_.size()) {
        throw DomainError("base station id out of range");
    }
}

Deployment Deployment::with_base_station() const {
    if (nodes_.empty()) {
        throw DomainError("cannot designate a base station in an empty deployment");
    }
    const Point centre = field_.centroid();
    NodeId best = 0;
    double best_distance = std::numeric_limits<double>::infinity();
    for (const Node& node : nodes_) {
        const double dist = squared_distance(node.position, centre);
        if (dist < best_distance) {
            best_distance = dist;
            best = node.id;
        }
    }
    return Deployment(field_, spacing_, sensing_radius_, nodes_, best);
}

Deployment generate_triangular_lattice(const SensingField& field, double d, double rs) {
    if (!(d > 0.0) || !std::isfinite(d)) {
        throw DomainError("spacing must be positive");
    }
    if (!(rs > 0.0) || !std::isfinite(rs)) {
        throw DomainError("sensing radius must be positive");
    }

    const double row_pitch = std::numbers::sqrt3 / 2.0 * d;
    const double slack = kBoundaryRelTol * std::max(field.width(), field.height());
    const double x_limit = field.width() + slack;
    const double y_limit = field.height() + slack;

    std::vector<Node> nodes;
    for (std::size_t row = 0;; ++row) {
        const double y = static_cast<double>(row) * row_pitch;
        if (y > y_limit) break;
        const double shift = (row % 2 == 1) ? 0.5 * d : 0.0;
        for (std::size_t col = 0;; ++col) {
            const double x = shift + static_cast<double>(col) * d;
            if (x > x_limit) break;
            const Point position{field.min_x() + std::min(x, field.width()),
                                 field.min_y() + std::min(y, field.height())};
            nodes.push_back({nodes.size(), position, rs});
        }
    }
    return Deployment(field, d, rs, std::move(nodes));
}

CoveragePlan plan_deployment(const SensingField& field, double alpha, double rs,
                             bool designate_base_station) {
    const SpacingSolution solution = spacing_for_alpha(alpha, rs);
    const CommRadiusBound bound = min_comm_radius(alpha, rs, field);
    Deployment deployment = generate_triangular_lattice(field, solution.spacing, rs);
    if (designate_base_station && !deployment.empty()) {
        deployment = deployment.with_base_station();
    }
    const std::size_t count = deployment.size();
    return CoveragePlan{alpha,
                        solution,
                        bound,
                        std::move(deployment),
                        count,
                        alpha_of_spacing(solution.spacing, rs)};
}

}  // namespace wsncov
