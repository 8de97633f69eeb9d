#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "oracles.hpp"
#include "wsncov/bisection.hpp"
#include "wsncov/coverage_model.hpp"
#include "wsncov/error.hpp"
#include "wsncov/geometry.hpp"

using namespace wsncov;
using std::numbers::pi;
using std::numbers::sqrt3;

namespace {

// Covered fraction of one lattice triangle assembled from sector and lens
// areas instead of the closed-form overlap branch.
double alpha_via_lens(double d, double rs) {
    const double covered = pi * rs * rs / 2.0 - 1.5 * lens_area(d, rs);
    return covered / (sqrt3 / 4.0 * d * d);
}

}  // namespace

TEST_CASE("alpha at the regime anchors") {
    CHECK(alpha_of_spacing(sqrt3, 1.0) == 1.0);
    CHECK(std::abs(alpha_of_spacing(2.0, 1.0) - pi / (2.0 * sqrt3)) < 1e-12);
    CHECK(std::abs(alpha_of_spacing(2.0, 1.0) - 0.906900) < 1e-6);
    CHECK(std::abs(alpha_of_spacing(4.0, 1.0) - pi / (8.0 * sqrt3)) < 1e-15);
    CHECK(std::abs(alpha_of_spacing(4.0, 1.0) - 0.226725) < 1e-6);
    CHECK(std::abs(alpha_of_spacing(1.9, 1.0) - 0.9647201560824692) < 1e-13);
    CHECK(alpha_of_spacing(0.5, 1.0) == 1.0);
}

TEST_CASE("alpha matches the unit-cell sampling oracle") {
    // Frozen oracle runs (4e6 samples on one rhombic cell, numpy):
    // d=1.9 -> 0.9646955, d=4 -> 0.227028.
    CHECK(std::abs(alpha_of_spacing(1.9, 1.0) - 0.9646955) < 2e-3);
    CHECK(std::abs(alpha_of_spacing(4.0, 1.0) - 0.227028) < 2e-3);
    for (double d : {1.75, 1.85, 2.0, 2.3, 3.1}) {
        CAPTURE(d);
        CHECK(std::abs(alpha_of_spacing(d, 1.0) - oracle::lattice_alpha_by_cell_sampling(d, 1.0, 400000, 11)) <
              4e-3);
    }
}

TEST_CASE("overlap branch equals the sector-minus-lens construction") {
    for (int i = 0; i <= 200; ++i) {
        const double d = sqrt3 + (2.0 - sqrt3) * i / 200.0;
        CHECK(overlap_branch_alpha(d / 2.0) == doctest::Approx(alpha_via_lens(d, 1.0)).epsilon(1e-12));
    }
}

TEST_CASE("branches are continuous at both boundaries") {
    CHECK(std::abs(overlap_branch_alpha(sqrt3 / 2.0) - 1.0) <= 1e-12);
    CHECK(std::abs(overlap_branch_alpha(1.0) - disjoint_branch_alpha(2.0, 1.0)) <= 1e-12);
}

TEST_CASE("alpha is monotone and scale invariant") {
    double previous = alpha_of_spacing(0.01, 1.0);
    for (int i = 1; i <= 5000; ++i) {
        const double d = 0.01 + 6.0 * i / 5000.0;
        const double current = alpha_of_spacing(d, 1.0);
        CHECK(current <= previous);
        if (d > sqrt3 + 1e-9) CHECK(current < previous);
        CHECK(current > 0.0);
        CHECK(current <= 1.0);
        previous = current;
    }
    for (double k : {0.1, 2.5, 1000.0}) {
        for (double d : {1.0, 1.8, 1.95, 2.0, 3.3}) {
            CHECK(alpha_of_spacing(k * d, k) == doctest::Approx(alpha_of_spacing(d, 1.0)).epsilon(1e-13));
        }
    }
}

TEST_CASE("alpha rejects nonpositive inputs") {
    CHECK_THROWS_AS(alpha_of_spacing(0.0, 1.0), DomainError);
    CHECK_THROWS_AS(alpha_of_spacing(1.0, 0.0), DomainError);
    CHECK_THROWS_AS(alpha_of_spacing(-1.0, 1.0), DomainError);
}

TEST_CASE("regime classification") {
    CHECK(classify_regime(1.5, 1.0) == CoverageRegime::Full);
    CHECK(classify_regime(sqrt3, 1.0) == CoverageRegime::Full);
    CHECK(classify_regime(1.8, 1.0) == CoverageRegime::OverlapPartial);
    CHECK(classify_regime(2.0, 1.0) == CoverageRegime::DisjointPartial);
    CHECK(classify_regime(7.0, 1.0) == CoverageRegime::DisjointPartial);
    CHECK_THROWS_AS(classify_regime(0.0, 1.0), DomainError);
    CHECK_THROWS_AS(classify_regime(1.0, -1.0), DomainError);

    // alpha above / at / below the point-overlap fraction matches d below / at / above 2 Rs
    CHECK(alpha_of_spacing(1.99, 1.0) > kPointOverlapAlpha);
    CHECK(alpha_of_spacing(2.0, 1.0) == doctest::Approx(kPointOverlapAlpha).epsilon(1e-15));
    CHECK(alpha_of_spacing(2.01, 1.0) < kPointOverlapAlpha);
    CHECK(to_string(CoverageRegime::OverlapPartial) == "OVERLAP_PARTIAL");
}

TEST_CASE("spacing for alpha at reference values") {
    const SpacingSolution full = spacing_for_alpha(1.0, 1.0);
    CHECK(full.spacing == doctest::Approx(sqrt3).epsilon(1e-15));
    CHECK(full.beta == doctest::Approx(sqrt3 / 2.0).epsilon(1e-15));
    CHECK(full.regime == CoverageRegime::Full);

    const SpacingSolution tangent = spacing_for_alpha(kPointOverlapAlpha, 1.0);
    CHECK(tangent.spacing == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(tangent.regime == CoverageRegime::DisjointPartial);

    CHECK(spacing_for_alpha(0.5, 1.0).spacing == doctest::Approx(std::sqrt(4.0 * pi / sqrt3)).epsilon(1e-14));
    CHECK(std::abs(spacing_for_alpha(0.5, 1.0).spacing - 2.69355) < 1e-5);

    // Frozen from scipy brentq on the overlap branch, xtol 1e-15.
    const SpacingSolution high = spacing_for_alpha(0.99, 1.0);
    CHECK(std::abs(high.spacing - 1.820541040900297) < 1e-10);
    CHECK(high.regime == CoverageRegime::OverlapPartial);
    CHECK(std::abs(alpha_of_spacing(high.spacing, 1.0) - 0.99) < 1e-9);

    CHECK(spacing_for_alpha(0.5, 3.0).spacing == doctest::Approx(3.0 * 2.693547374177197).epsilon(1e-14));
}

TEST_CASE("spacing for alpha rejects alpha outside (0,1]") {
    CHECK_THROWS_AS(spacing_for_alpha(0.0, 1.0), DomainError);
    CHECK_THROWS_AS(spacing_for_alpha(-0.2, 1.0), DomainError);
    CHECK_THROWS_AS(spacing_for_alpha(1.0000001, 1.0), DomainError);
    CHECK_THROWS_AS(spacing_for_alpha(0.5, 0.0), DomainError);
    CHECK_THROWS_WITH(spacing_for_alpha(0.0, 1.0), "alpha must be in (0,1]");
}

TEST_CASE("inversion round trip on a dense grid") {
    for (int i = 1; i <= 4000; ++i) {
        const double alpha = i / 4000.0;
        const SpacingSolution s = spacing_for_alpha(alpha, 1.0);
        CHECK(std::abs(alpha_of_spacing(s.spacing, 1.0) - alpha) <= 1e-9);
        CHECK(s.beta == doctest::Approx(s.spacing / 2.0).epsilon(1e-15));
        if (alpha > kPointOverlapAlpha && alpha < 1.0) {
            CHECK(s.spacing > sqrt3);
            CHECK(s.spacing < 2.0);
        }
    }
}

TEST_CASE("bisection") {
    CHECK(bisect([](double x) { return x * x - 2.0; }, 0.0, 2.0, 1e-14) ==
          doctest::Approx(std::numbers::sqrt2).epsilon(1e-13));
    CHECK(bisect([](double x) { return 1.0 - x; }, 0.0, 1.0, 1e-12) == 1.0);
    CHECK_THROWS_AS(bisect([](double x) { return x * x + 1.0; }, -1.0, 1.0, 1e-12), DomainError);
}

TEST_CASE("lookup table rows") {
    const std::vector<double> single{1.0};
    const LookupTable top = build_lookup_table(single);
    REQUIRE(top.rows.size() == 1);
    CHECK(top.rows[0].beta == doctest::Approx(sqrt3 / 2.0));
    CHECK(top.rows[0].spacing_over_rs == doctest::Approx(sqrt3));
    CHECK(top.rows[0].rc_min_over_rs == doctest::Approx(sqrt3));

    const std::vector<double> tangent{kPointOverlapAlpha};
    const LookupRow row = build_lookup_table(tangent).rows.at(0);
    CHECK(row.alpha == doctest::Approx(0.9069).epsilon(1e-4));
    CHECK(row.beta == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(row.spacing_over_rs == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(row.rc_min_over_rs == doctest::Approx(2.0).epsilon(1e-15));

    const std::vector<double> three{0.25, 0.5, 0.75};
    const LookupTable t = build_lookup_table(three, 2.0);
    CHECK(t.rows[0].spacing_over_rs == doctest::Approx(3.8092512274558294).epsilon(1e-13));
    CHECK(t.rows[1].spacing_over_rs == doctest::Approx(2.693547374177197).epsilon(1e-13));
    CHECK(t.rows[2].spacing_over_rs == doctest::Approx(2.1992722215825355).epsilon(1e-13));
    for (const LookupRow& r : t.rows) {
        CHECK(alpha_of_spacing(r.spacing_over_rs, 1.0) == doctest::Approx(r.alpha).epsilon(1e-9));
    }
}

TEST_CASE("lookup table rejects bad alpha lists") {
    const std::vector<double> unsorted{0.5, 0.4};
    const std::vector<double> repeated{0.5, 0.5};
    const std::vector<double> out_of_range{0.5, 1.2};
    const std::vector<double> zero{0.0, 0.5};
    CHECK_THROWS_AS(build_lookup_table(unsorted), DomainError);
    CHECK_THROWS_AS(build_lookup_table(repeated), DomainError);
    CHECK_THROWS_AS(build_lookup_table(out_of_range), DomainError);
    CHECK_THROWS_AS(build_lookup_table(zero), DomainError);
    CHECK(build_lookup_table(std::vector<double>{}).rows.empty());
}
