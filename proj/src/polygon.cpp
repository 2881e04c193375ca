#include "fenceopt/polygon.hpp"

#include <algorithm>
#include <cmath>

#include "fenceopt/errors.hpp"

namespace fenceopt {

double Polygon::signed_area() const { return shoelace(vertices); }

double Polygon::perimeter() const {
    double len = 0.0;
    const std::size_t n = vertices.size();
    for (std::size_t i = 0; i < n; ++i) len += dist(vertices[i], vertices[(i + 1) % n]);
    return len;
}

bool Polygon::is_simple() const { return loop_is_simple(vertices); }

void Polygon::validate() const {
    if (vertices.size() < 3) throw UnsupportedInputError("polygon needs >= 3 vertices");
    if (!(signed_area() > 0.0))
        throw UnsupportedInputError("polygon must be counter-clockwise with positive area");
    if (!is_simple()) throw UnsupportedInputError("polygon must be simple");
}

namespace {

// An edge lies on a border side iff both endpoint distances to the side's
// line are within tol and the endpoint offsets agree within tol.
bool edge_on_line(double d1, double d2, double tol) {
    return std::abs(d1) <= tol && std::abs(d2) <= tol && std::abs(d1 - d2) <= tol;
}

} // namespace

SideContacts side_contacts(const Polygon& p, const Rect& rect) {
    const double x = rect.x();
    const double y = rect.y();
    const double tol = 1e-9 * std::max(x, y);

    for (const Point& v : p.vertices) {
        if (v.x < -tol || v.x > x + tol || v.y < -tol || v.y > y + tol)
            throw DomainError("polygon is not contained in the rectangle");
    }

    SideContacts c;
    const std::size_t n = p.vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = p.vertices[i];
        const Point& b = p.vertices[(i + 1) % n];
        const double len = dist(a, b);
        if (len == 0.0) continue;
        if (edge_on_line(a.x, b.x, tol)) c.left += len;
        else if (edge_on_line(a.x - x, b.x - x, tol)) c.right += len;
        else if (edge_on_line(a.y, b.y, tol)) c.bottom += len;
        else if (edge_on_line(a.y - y, b.y - y, tol)) c.top += len;
    }
    return c;
}

double free_perimeter_polygon(const Polygon& p, const Rect& rect) {
    SideContacts c = side_contacts(p, rect);
    return p.perimeter() - (c.left + c.right + c.bottom + c.top);
}

TouchClass touch_class_polygon(const Polygon& p, const Rect& rect) {
    SideContacts c = side_contacts(p, rect);
    const bool l = c.left > 0.0, r = c.right > 0.0, b = c.bottom > 0.0, t = c.top > 0.0;
    const int count = int(l) + int(r) + int(b) + int(t);
    switch (count) {
        case 0: return TouchClass::Zero;
        case 1: return TouchClass::One;
        case 2: return ((l && r) || (b && t)) ? TouchClass::TwoOpposite : TouchClass::TwoAdjacent;
        case 3: return TouchClass::Three;
        default: return TouchClass::Four;
    }
}

} // namespace fenceopt
