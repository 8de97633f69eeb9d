#pragma once

#include <numbers>
#include <span>
#include <string_view>
#include <vector>

namespace wsncov {

// Coverage fraction of the triangular lattice at d = 2 Rs, where adjacent
// sensing disks become tangent. Separates the overlapping and disjoint regimes.
inline constexpr double kPointOverlapAlpha = std::numbers::pi / (2.0 * std::numbers::sqrt3);

// Spacing over sensing radius below which the lattice covers the plane fully.
inline constexpr double kFullCoverageSpacingRatio = std::numbers::sqrt3;
inline constexpr double kPointOverlapSpacingRatio = 2.0;

// Absolute tolerance on beta = d / (2 Rs) used by the inversion.
inline constexpr double kBetaTolerance = 1e-12;

enum class CoverageRegime {
    Full,             // d <= sqrt(3) Rs
    OverlapPartial,   // sqrt(3) Rs < d < 2 Rs
    DisjointPartial,  // d >= 2 Rs
};

std::string_view to_string(CoverageRegime regime);

struct SpacingSolution {
    double alpha = 0.0;
    double beta = 0.0;     // spacing / (2 Rs)
    double spacing = 0.0;  // d_alpha
    CoverageRegime regime = CoverageRegime::Full;
};

// The two analytic branches, exposed separately so their agreement at the
// regime boundaries can be checked. Neither one clamps.
double overlap_branch_alpha(double beta);
double disjoint_branch_alpha(double d, double rs);

// Covered fraction of the field for a triangular lattice of side d.
// Exactly 1 for d <= sqrt(3) Rs.
double alpha_of_spacing(double d, double rs);

CoverageRegime classify_regime(double d, double rs);

// Lattice side length achieving coverage fraction alpha in (0, 1].
SpacingSolution spacing_for_alpha(double alpha, double rs);

struct LookupRow {
    double alpha = 0.0;
    double beta = 0.0;
    double spacing_over_rs = 0.0;
    double rc_min_over_rs = 0.0;
};

struct LookupTable {
    std::vector<LookupRow> rows;
};

// One row per alpha, which must be strictly increasing and within (0, 1].
// Lengths are stored normalized by rs.
LookupTable build_lookup_table(std::span<const double> alphas, double rs = 1.0);

}  // namespace wsncov
