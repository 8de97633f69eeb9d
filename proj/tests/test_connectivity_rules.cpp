#include <doctest.h>

#include <cmath>
#include <numbers>

#include "wsncov/connectivity_rules.hpp"
#include "wsncov/error.hpp"

using namespace wsncov;
using std::numbers::pi;
using std::numbers::sqrt3;

TEST_CASE("min comm radius at reference alphas") {
    const CommRadiusBound tangent = min_comm_radius(kPointOverlapAlpha, 1.0);
    CHECK(tangent.rc_min == 2.0);
    CHECK_FALSE(tangent.capped_by_diameter);

    const CommRadiusBound half = min_comm_radius(0.5, 1.0);
    CHECK(half.rc_min == doctest::Approx(2.693547374177197).epsilon(1e-14));
    CHECK(half.rc_min == doctest::Approx(spacing_for_alpha(0.5, 1.0).spacing).epsilon(1e-14));
    CHECK(half.regime == CoverageRegime::DisjointPartial);

    // Frozen from scipy brentq; forward map gives alpha(1.93207) = 0.95.
    const CommRadiusBound high = min_comm_radius(0.95, 1.0);
    CHECK(std::abs(high.rc_min - 1.9320655506571178) < 1e-10);
    CHECK(high.rc_min > sqrt3);
    CHECK(high.rc_min < 2.0);
    CHECK(high.regime == CoverageRegime::OverlapPartial);

    CHECK(min_comm_radius(1.0, 1.0).rc_min == doctest::Approx(sqrt3).epsilon(1e-15));
}

TEST_CASE("diameter cap applies only above the field diameter") {
    const SensingField field(10, 10);
    const CommRadiusBound sparse = min_comm_radius(0.01, 1.0, field);
    CHECK(sparse.capped_by_diameter);
    CHECK(sparse.rc_min == doctest::Approx(std::sqrt(200.0)).epsilon(1e-15));
    CHECK(disjoint_rc_factor(0.01) == doctest::Approx(19.046256137279148).epsilon(1e-13));

    const CommRadiusBound dense = min_comm_radius(0.5, 1.0, field);
    CHECK_FALSE(dense.capped_by_diameter);
    CHECK(dense.rc_min == doctest::Approx(2.693547374177197).epsilon(1e-14));
}

TEST_CASE("min comm radius is non-increasing in alpha and piecewise consistent") {
    double previous = min_comm_radius(0.0005, 1.0).rc_min;
    for (int i = 2; i <= 2000; ++i) {
        const double alpha = i * 0.0005;
        const double rc = min_comm_radius(alpha, 1.0).rc_min;
        CHECK(rc <= previous);
        previous = rc;
        if (alpha <= kPointOverlapAlpha) {
            CHECK(std::abs(rc - spacing_for_alpha(alpha, 1.0).spacing) <= 1e-12);
            CHECK(std::abs(rc - std::sqrt(2.0 * pi / (sqrt3 * alpha))) <= 1e-12);
        }
    }
    const double below = min_comm_radius(std::nextafter(kPointOverlapAlpha, 0.0), 1.0).rc_min;
    const double above = min_comm_radius(std::nextafter(kPointOverlapAlpha, 1.0), 1.0).rc_min;
    CHECK(std::abs(below - 2.0) <= 1e-9);
    CHECK(std::abs(above - 2.0) <= 1e-9);
}

TEST_CASE("min comm radius scales with rs when uncapped") {
    for (double alpha : {0.05, 0.3, 0.906, 0.93, 0.999, 1.0}) {
        for (double k : {0.2, 7.0}) {
            CHECK(min_comm_radius(alpha, k).rc_min == doctest::Approx(k * min_comm_radius(alpha, 1.0).rc_min).epsilon(1e-11));
        }
    }
}

TEST_CASE("min comm radius rejects invalid alpha and rs") {
    CHECK_THROWS_AS(min_comm_radius(0.0, 1.0), DomainError);
    CHECK_THROWS_AS(min_comm_radius(1.5, 1.0), DomainError);
    CHECK_THROWS_AS(min_comm_radius(0.5, 0.0), DomainError);
}

TEST_CASE("connected full coverage condition") {
    CHECK(cfc_condition(2.0, 1.0));
    CHECK_FALSE(cfc_condition(1.99, 1.0));
    CHECK(cfc_condition(4.0, 2.0));
    CHECK_THROWS_AS(cfc_condition(0.0, 1.0), DomainError);
    CHECK_THROWS_AS(cfc_condition(1.0, -1.0), DomainError);
}

TEST_CASE("coverage implies connectivity") {
    CHECK(coverage_implies_connectivity(1.0, sqrt3, 1.0));
    CHECK_FALSE(coverage_implies_connectivity(kPointOverlapAlpha, 1.9, 1.0));
    CHECK(coverage_implies_connectivity(0.5, 2.7, 1.0));
    CHECK_FALSE(coverage_implies_connectivity(0.5, 2.69, 1.0));
    CHECK(coverage_implies_connectivity(0.01, 14.2, 1.0, SensingField(10, 10)));
    CHECK_FALSE(coverage_implies_connectivity(0.01, 14.2, 1.0));
    CHECK_THROWS_AS(coverage_implies_connectivity(0.0, 2.0, 1.0), DomainError);
}
