#pragma once

#include <optional>

#include "wsncov/coverage_model.hpp"
#include "wsncov/geometry.hpp"

namespace wsncov {

struct CommRadiusBound {
    double alpha = 0.0;
    double rc_min = 0.0;
    bool capped_by_diameter = false;
    CoverageRegime regime = CoverageRegime::Full;
};

// sqrt(2 pi / (sqrt(3) alpha)): minimum Rc / Rs for alpha at or below the
// point-overlap fraction.
double disjoint_rc_factor(double alpha);

// Minimum communication radius for which alpha-coverage of a triangular
// lattice deployment implies a connected network.
//
//   alpha in (pi/(2 sqrt 3), 1]  ->  d_alpha from the overlap branch, in [sqrt(3) Rs, 2 Rs)
//   alpha == pi/(2 sqrt 3)       ->  2 Rs
//   alpha <  pi/(2 sqrt 3)       ->  disjoint_rc_factor(alpha) * Rs
//
// With a field, a radius beyond the field diameter buys nothing, so the result
// is capped there and `capped_by_diameter` is set.
CommRadiusBound min_comm_radius(double alpha, double rs,
                                const std::optional<SensingField>& field = std::nullopt);

// Connected-full-coverage condition for arbitrary deployments: Rc >= 2 Rs.
bool cfc_condition(double rc, double rs);

bool coverage_implies_connectivity(double alpha, double rc, double rs,
                                   const std::optional<SensingField>& field = std::nullopt);

}  // namespace wsncov
