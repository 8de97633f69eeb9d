#include "wsncov/connectivity_rules.hpp"

#include <cmath>
#include <numbers>

#include "wsncov/error.hpp"

namespace wsncov {

double disjoint_rc_factor(double alpha) {
    if (!(alpha > 0.0 && alpha <= 1.0)) {
        throw DomainError("alpha must be in (0,1]");
    }
    return std::sqrt(2.0 * std::numbers::pi / (std::numbers::sqrt3 * alpha));
}

CommRadiusBound min_comm_radius(double alpha, double rs, const std::optional<SensingField>& field) {
    if (!(alpha > 0.0 && alpha <= 1.0)) {
        throw DomainError("alpha must be in (0,1]");
    }
    if (!(rs > 0.0) || !std::isfinite(rs)) {
        throw DomainError("sensing radius must be positive");
    }

    CommRadiusBound bound;
    bound.alpha = alpha;
    if (alpha > kPointOverlapAlpha) {
        const SpacingSolution solution = spacing_for_alpha(alpha, rs);
        bound.rc_min = solution.spacing;
        bound.regime = solution.regime;
    } else if (alpha == kPointOverlapAlpha) {
        bound.rc_min = 2.0 * rs;
        bound.regime = CoverageRegime::DisjointPartial;
    } else {
        bound.rc_min = disjoint_rc_factor(alpha) * rs;
        bound.regime = CoverageRegime::DisjointPartial;
    }

    if (field) {
        const double diameter = field_diameter(*field);
        if (bound.rc_min > diameter) {
            bound.rc_min = diameter;
            bound.capped_by_diameter = true;
        }
    }
    return bound;
}

bool cfc_condition(double rc, double rs) {
    if (!(rc > 0.0) || !(rs > 0.0)) {
        throw DomainError("communication and sensing radii must be positive");
    }
    return rc >= 2.0 * rs;
}

bool coverage_implies_connectivity(double alpha, double rc, double rs,
                                   const std::optional<SensingField>& field) {
    if (!(rc > 0.0)) {
        throw DomainError("communication radius must be positive");
    }
    return rc >= min_comm_radius(alpha, rs, field).rc_min;
}

}  // namespace wsncov
