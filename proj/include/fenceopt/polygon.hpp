#pragma once
#include <vector>

#include "fenceopt/geom.hpp"
#include "fenceopt/rect.hpp"

namespace fenceopt {

// Simple polygon, counter-clockwise, positive area. Concrete representative
// of a shape whose free perimeter the analytic bounds talk about.
struct Polygon {
    std::vector<Point> vertices;

    double signed_area() const;
    double area() const { return signed_area(); }
    double perimeter() const;
    bool is_simple() const;

    // Throws UnsupportedInputError when the invariants fail (< 3 vertices,
    // non-positive signed area, self-intersection).
    void validate() const;
};

// Per-side contact lengths of p with the border of rect placed as
// [0, x] x [0, y]. Order: left (gx=0), right (gx=x), bottom (gy=0), top.
struct SideContacts {
    double left{0}, right{0}, bottom{0}, top{0};
};

SideContacts side_contacts(const Polygon& p, const Rect& rect);

// Boundary length of p that does not lie on the rectangle border.
// Throws DomainError if p is not contained in the rectangle.
double free_perimeter_polygon(const Polygon& p, const Rect& rect);

// Which sides carry positive contact length, folded into a TouchClass.
TouchClass touch_class_polygon(const Polygon& p, const Rect& rect);

} // namespace fenceopt
