#include <cmath>
#include <numbers>
#include <variant>

#include "doctest.h"
#include "fenceopt/bounds.hpp"
#include "fenceopt/errors.hpp"
#include "fenceopt/fence_geometry.hpp"

using namespace fenceopt;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_SUITE("fence-geometry") {

TEST_CASE("optimal fence picks the right construction") {
    const Rect rect(1.0, 2.0);

    const FenceGeometry cut = optimal_fence(rect, 1.0);
    REQUIRE(std::holds_alternative<StraightCut>(cut));
    CHECK(std::get<StraightCut>(cut).offset == 1.0);

    const FenceGeometry arc = optimal_fence(rect, 0.25);
    REQUIRE(std::holds_alternative<QuarterArc>(arc));
    CHECK(std::get<QuarterArc>(arc).corner == Corner::Origin);
    CHECK_FALSE(std::get<QuarterArc>(arc).encloses_complement);
    CHECK(std::get<QuarterArc>(arc).radius == 0.5641895835477563);  // 2*sqrt(a/pi)

    const FenceGeometry carc = optimal_fence(rect, 1.9);
    REQUIRE(std::holds_alternative<QuarterArc>(carc));
    CHECK(std::get<QuarterArc>(carc).encloses_complement);
    CHECK(std::get<QuarterArc>(carc).radius == 0.35682482323055437);

    CHECK(std::holds_alternative<NoFence>(optimal_fence(rect, 0.0)));
    CHECK_FALSE(std::get<NoFence>(optimal_fence(rect, 0.0)).full);
    CHECK(std::get<NoFence>(optimal_fence(rect, 2.0)).full);
}

TEST_CASE("constructed length equals the analytic minimum") {
    const Rect rect(1.0, 2.0);
    // exact on the cut and empty branches
    CHECK(fence_length(optimal_fence(rect, 1.0), rect) == l_star(rect, 1.0));
    CHECK(fence_length(optimal_fence(rect, 0.0), rect) == 0.0);
    CHECK(fence_length(optimal_fence(rect, 2.0), rect) == 0.0);
    // within a few ulp on the arc branches ((pi/2)*2*sqrt(a/pi) vs sqrt(pi*a))
    for (double a : {0.05, 0.2, 0.3, 1.7, 1.85, 1.95}) {
        const double built = fence_length(optimal_fence(rect, a), rect);
        CHECK(built == doctest::Approx(l_star(rect, a)).epsilon(1e-15));
    }
}

TEST_CASE("constructed area is the requested area") {
    const Rect rect(1.0, 2.0);
    for (double a : {0.0, 0.1, 0.25, 0.5, 1.0, 1.5, 1.9, 2.0}) {
        const double got = fence_enclosed_area(optimal_fence(rect, a), rect);
        CHECK(got == doctest::Approx(a).epsilon(1e-14));
    }
}

TEST_CASE("length and area of each geometry kind") {
    const Rect rect(2.0, 3.0);
    const StraightCut cut{1.2};
    CHECK(fence_length(FenceGeometry{cut}, rect) == 2.0);
    CHECK(fence_enclosed_area(FenceGeometry{cut}, rect) == doctest::Approx(2.4));

    const QuarterArc arc{Corner::Origin, 1.0, false};
    CHECK(fence_length(FenceGeometry{arc}, rect) == doctest::Approx(kPi / 2.0));
    CHECK(fence_enclosed_area(FenceGeometry{arc}, rect) == doctest::Approx(kPi / 4.0));

    const QuarterArc comp{Corner::Origin, 1.0, true};
    CHECK(fence_length(FenceGeometry{comp}, rect) == doctest::Approx(kPi / 2.0));
    CHECK(fence_enclosed_area(FenceGeometry{comp}, rect) == doctest::Approx(6.0 - kPi / 4.0));

    CHECK(fence_length(FenceGeometry{NoFence{}}, rect) == 0.0);
    CHECK(fence_enclosed_area(FenceGeometry{NoFence{}}, rect) == 0.0);
    CHECK(fence_enclosed_area(FenceGeometry{NoFence{true}}, rect) == 6.0);
}

TEST_CASE("validation rejects out-of-range geometry") {
    const Rect rect(1.0, 2.0);
    CHECK_NOTHROW(validate_fence(FenceGeometry{StraightCut{0.0}}, rect));
    CHECK_NOTHROW(validate_fence(FenceGeometry{StraightCut{2.0}}, rect));
    CHECK_THROWS_AS(validate_fence(FenceGeometry{StraightCut{-0.1}}, rect), DomainError);
    CHECK_THROWS_AS(validate_fence(FenceGeometry{StraightCut{2.1}}, rect), DomainError);
    // radius capped at 2X/pi, where the quarter disk reaches the threshold area
    const double rmax = 2.0 / kPi;
    CHECK_NOTHROW(validate_fence(FenceGeometry{QuarterArc{Corner::Origin, rmax, false}}, rect));
    CHECK_THROWS_AS(
        validate_fence(FenceGeometry{QuarterArc{Corner::Origin, rmax * 1.0001, false}}, rect),
        DomainError);
    CHECK_THROWS_AS(validate_fence(FenceGeometry{QuarterArc{Corner::Origin, 0.0, false}}, rect),
                    DomainError);
}

TEST_CASE("optimal fences validate across the area range") {
    const Rect rect(0.7, 3.1);
    for (int i = 0; i <= 50; ++i) {
        const double a = rect.area() * i / 50.0;
        CHECK_NOTHROW(validate_fence(optimal_fence(rect, a), rect));
    }
}

TEST_CASE("describe strings") {
    const Rect rect(1.0, 2.0);
    CHECK(describe(optimal_fence(rect, 1.0)) == "straight-cut:offset=1");
    CHECK(describe(optimal_fence(rect, 0.25)) ==
          "quarter-arc:corner=origin,radius=0.5641895835477563");
    CHECK(describe(optimal_fence(rect, 1.9)) ==
          "quarter-arc-complement:corner=origin,radius=0.35682482323055437");
    CHECK(describe(optimal_fence(rect, 0.0)) == "empty");
    CHECK(describe(optimal_fence(rect, 2.0)) == "full");
}

TEST_CASE("area outside the rectangle is rejected") {
    const Rect rect(1.0, 2.0);
    CHECK_THROWS_AS(optimal_fence(rect, -0.5), DomainError);
    CHECK_THROWS_AS(optimal_fence(rect, 2.5), DomainError);
}

} // TEST_SUITE
