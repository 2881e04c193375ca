#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "fenceopt/errors.hpp"
#include "fenceopt/reflections.hpp"

using namespace fenceopt;

namespace {
constexpr double kPi = std::numbers::pi;

// N-chord approximation of the quarter circle of radius r around the origin,
// closed along the two axes.
Polygon quarter_disk_chords(double r, int chords) {
    Polygon p;
    p.vertices.push_back({0.0, 0.0});
    for (int i = 0; i <= chords; ++i) {
        const double phi = kPi / 2.0 * i / chords;
        p.vertices.push_back({r * std::cos(phi), r * std::sin(phi)});
    }
    return p;
}
} // namespace

TEST_SUITE("reflections") {

TEST_CASE("mirror and signed distance") {
    const AxisLine ax{{0, 0}, {1, 0}};
    CHECK(signed_distance(ax, {3, 2}) == 2.0);
    CHECK(signed_distance(ax, {3, -2}) == -2.0);
    CHECK(mirror(ax, {3, 2}).y == -2.0);
    CHECK(mirror(ax, {3, 2}).x == 3.0);
    const AxisLine diag{{0, 0}, normalized({1, 1})};
    const Point m = mirror(diag, {1, 0});
    CHECK(m.x == doctest::Approx(0.0));
    CHECK(m.y == doctest::Approx(1.0));
}

TEST_CASE("half-plane reflection doubles a square into a rectangle") {
    const Polygon sq{{{0, 0}, {1, 0}, {1, 1}, {0, 1}}};
    const AxisLine ax{{0, 0}, {1, 0}};
    const Polygon dbl = reflect_half_plane(sq, ax);
    CHECK_NOTHROW(dbl.validate());
    CHECK(dbl.area() == 2.0 * sq.area());
    CHECK(off_axis_boundary(dbl, ax) == 2.0 * off_axis_boundary(sq, ax));
    CHECK(off_axis_boundary(sq, ax) == 3.0);
}

TEST_CASE("half-plane reflection of a trapezoid is exact") {
    const Polygon trap{{{0, 0}, {2, 0}, {1.5, 1}, {0.5, 1}}};
    const AxisLine ax{{0, 0}, {1, 0}};
    const Polygon dbl = reflect_half_plane(trap, ax);
    CHECK_NOTHROW(dbl.validate());
    CHECK(dbl.area() == doctest::Approx(2.0 * trap.area()).epsilon(1e-15));
    CHECK(off_axis_boundary(dbl, ax) ==
          doctest::Approx(2.0 * off_axis_boundary(trap, ax)).epsilon(1e-15));
}

TEST_CASE("contact run may span several collinear edges") {
    // bottom edge split by a middle vertex
    const Polygon split{{{0, 0}, {1, 0}, {2, 0}, {2, 1}, {0, 1}}};
    const AxisLine ax{{0, 0}, {1, 0}};
    const Polygon dbl = reflect_half_plane(split, ax);
    CHECK_NOTHROW(dbl.validate());
    CHECK(dbl.area() == doctest::Approx(4.0).epsilon(1e-15));
}

TEST_CASE("half-plane reflection rejects bad contact") {
    const AxisLine ax{{0, 0}, {1, 0}};
    // strictly above the axis: no contact at all
    const Polygon floating{{{0, 1}, {1, 1}, {0.5, 2}}};
    CHECK_THROWS_AS(reflect_half_plane(floating, ax), UnsupportedInputError);
    // touches the axis only at one vertex
    const Polygon pointy{{{1, 0}, {2, 1}, {0, 1}}};
    CHECK_THROWS_AS(reflect_half_plane(pointy, ax), UnsupportedInputError);
    // crosses the axis
    const Polygon crossing{{{0, -0.5}, {1, -0.5}, {1, 1}, {0, 1}}};
    CHECK_THROWS_AS(reflect_half_plane(crossing, ax), DomainError);
    // two separate contact runs pinch the union
    const Polygon comb{{{0, 0}, {1, 0}, {1, 1}, {2, 1}, {2, 0}, {3, 0},
                        {3, 2}, {0, 2}}};
    CHECK_THROWS_AS(reflect_half_plane(comb, ax), UnsupportedInputError);
}

TEST_CASE("quarter-plane reflection quadruples a corner square") {
    const Polygon sq{{{0, 0}, {0.5, 0}, {0.5, 0.5}, {0, 0.5}}};
    const CornerFrame corner{{0, 0}, {1, 0}};
    const Polygon quad = reflect_quarter_plane(sq, corner);
    CHECK_NOTHROW(quad.validate());
    CHECK(quad.area() == 4.0 * sq.area());
    CHECK(quad.perimeter() == 4.0);  // the 1x1 square centered at the corner
}

TEST_CASE("quarter-plane reflection of a staircase hexagon") {
    const Polygon stair{{{0, 0}, {0.6, 0}, {0.6, 0.2}, {0.3, 0.2}, {0.3, 0.5}, {0, 0.5}}};
    const CornerFrame corner{{0, 0}, {1, 0}};
    const Polygon quad = reflect_quarter_plane(stair, corner);
    CHECK_NOTHROW(quad.validate());
    CHECK(quad.area() == doctest::Approx(4.0 * stair.area()).epsilon(1e-15));
    // free boundary (both legs off the axes) quadruples into the perimeter
    const double free_len = 0.2 + 0.3 + 0.3 + 0.3;  // edges not on an axis
    CHECK(quad.perimeter() == doctest::Approx(4.0 * free_len).epsilon(1e-15));
}

TEST_CASE("64-chord quarter disk approaches the arc bound") {
    const double r = 0.8;
    const Polygon qd = quarter_disk_chords(r, 64);
    CHECK_NOTHROW(qd.validate());
    const CornerFrame corner{{0, 0}, {1, 0}};
    const Polygon disk = reflect_quarter_plane(qd, corner);
    CHECK_NOTHROW(disk.validate());
    CHECK(disk.area() == doctest::Approx(4.0 * qd.area()).epsilon(1e-14));
    // the quadrupled boundary is the inscribed polygon of the full circle
    CHECK(disk.perimeter() == doctest::Approx(2.0 * kPi * r).epsilon(1e-3));
    CHECK(disk.perimeter() < 2.0 * kPi * r);  // inscribed, so from below
    CHECK(disk.area() == doctest::Approx(kPi * r * r).epsilon(1e-3));
}

TEST_CASE("quarter-plane reflection demands contact through the apex") {
    const CornerFrame corner{{0, 0}, {1, 0}};
    // touches only the horizontal ray: the first reflection kills the
    // vertical contact needed by the second
    const Polygon strip{{{0.2, 0}, {0.8, 0}, {0.8, 0.3}, {0.2, 0.3}}};
    CHECK_THROWS_AS(reflect_quarter_plane(strip, corner), UnsupportedInputError);
    // leaves the quarter plane
    const Polygon outside{{{-0.1, 0}, {0.5, 0}, {0.5, 0.5}, {-0.1, 0.5}}};
    CHECK_THROWS_AS(reflect_quarter_plane(outside, corner), DomainError);
}

TEST_CASE("rotated corner frame") {
    // quarter plane spanned by (0,1) and (-1,0): the second quadrant
    const CornerFrame corner{{0, 0}, {0, 1}};
    const Polygon sq{{{0, 0}, {0, 0.4}, {-0.4, 0.4}, {-0.4, 0}}};
    CHECK(sq.signed_area() > 0.0);
    const Polygon quad = reflect_quarter_plane(sq, corner);
    CHECK_NOTHROW(quad.validate());
    CHECK(quad.area() == doctest::Approx(4.0 * sq.area()).epsilon(1e-14));
}

} // TEST_SUITE
