#include "wsncov/coverage_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "wsncov/bisection.hpp"
#include "wsncov/connectivity_rules.hpp"
#include "wsncov/error.hpp"

namespace wsncov {

namespace {

void require_positive(double value, const char* message) {
    if (!(value > 0.0) || !std::isfinite(value)) {
        throw DomainError(message);
    }
}

void require_alpha(double alpha) {
    if (!(alpha > 0.0 && alpha <= 1.0)) {
        throw DomainError("alpha must be in (0,1]");
    }
}

}  // namespace

std::string_view to_string(CoverageRegime regime) {
    switch (regime) {
        case CoverageRegime::Full:
            return "FULL";
        case CoverageRegime::OverlapPartial:
            return "OVERLAP_PARTIAL";
        case CoverageRegime::DisjointPartial:
            return "DISJOINT_PARTIAL";
    }
    return "UNKNOWN";
}

double overlap_branch_alpha(double beta) {
    using std::numbers::pi;
    using std::numbers::sqrt3;
    const double b = std::clamp(beta, -1.0, 1.0);
    const double bracket = pi / 2.0 - 3.0 * std::acos(b) + 3.0 * b * std::sqrt(1.0 - b * b);
    return bracket / (sqrt3 * beta * beta);
}

double disjoint_branch_alpha(double d, double rs) {
    return 2.0 * std::numbers::pi * rs * rs / (std::numbers::sqrt3 * d * d);
}

CoverageRegime classify_regime(double d, double rs) {
    require_positive(d, "spacing must be positive");
    require_positive(rs, "sensing radius must be positive");
    const double ratio = d / rs;
    if (ratio <= kFullCoverageSpacingRatio) return CoverageRegime::Full;
    if (ratio < kPointOverlapSpacingRatio) return CoverageRegime::OverlapPartial;
    return CoverageRegime::DisjointPartial;
}

double alpha_of_spacing(double d, double rs) {
    switch (classify_regime(d, rs)) {
        case CoverageRegime::Full:
            return 1.0;
        case CoverageRegime::OverlapPartial:
            return std::min(1.0, overlap_branch_alpha(d / (2.0 * rs)));
        case CoverageRegime::DisjointPartial:
            return disjoint_branch_alpha(d, rs);
    }
    return 0.0;
}

SpacingSolution spacing_for_alpha(double alpha, double rs) {
    require_alpha(alpha);
    require_positive(rs, "sensing radius must be positive");

    SpacingSolution solution;
    solution.alpha = alpha;
    if (alpha == 1.0) {
        solution.beta = std::numbers::sqrt3 / 2.0;
    } else if (alpha > kPointOverlapAlpha) {
        // Strictly decreasing on [sqrt(3)/2, 1], from 1 down to kPointOverlapAlpha.
        solution.beta = bisect([alpha](double beta) { return overlap_branch_alpha(beta) - alpha; },
                               std::numbers::sqrt3 / 2.0, 1.0, kBetaTolerance);
    } else {
        solution.beta = std::sqrt(2.0 * std::numbers::pi / (std::numbers::sqrt3 * alpha)) / 2.0;
    }
    solution.spacing = 2.0 * rs * solution.beta;
    // Labelled from alpha: recomputing from spacing/rs can round across a boundary.
    if (alpha == 1.0) {
        solution.regime = CoverageRegime::Full;
    } else if (alpha > kPointOverlapAlpha) {
        solution.regime = CoverageRegime::OverlapPartial;
    } else {
        solution.regime = CoverageRegime::DisjointPartial;
    }
    return solution;
}

LookupTable build_lookup_table(std::span<const double> alphas, double rs) {
    require_positive(rs, "sensing radius must be positive");
    LookupTable table;
    table.rows.reserve(alphas.size());
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        require_alpha(alphas[i]);
        if (i > 0 && !(alphas[i] > alphas[i - 1])) {
            throw DomainError("lookup table alphas must be strictly increasing");
        }
        const SpacingSolution solution = spacing_for_alpha(alphas[i], rs);
        const CommRadiusBound bound = min_comm_radius(alphas[i], rs);
        table.rows.push_back({alphas[i], solution.beta, solution.spacing / rs, bound.rc_min / rs});
    }
    return table;
}

}  // namespace wsncov
