#pragma once
#include "fenceopt/polygon.hpp"

namespace fenceopt {

// Directed line bounding a half-plane; the closed half-plane is the side to
// the LEFT of dir.
struct AxisLine {
    Point origin;
    Point dir;
};

// Right-angle corner of a quarter-plane: the quarter is spanned by dir and
// rot90(dir) (both coordinates nonnegative in that frame).
struct CornerFrame {
    Point apex;
    Point dir;
};

double signed_distance(const AxisLine& axis, Point q);
Point mirror(const AxisLine& axis, Point q);

// Boundary length of p not lying on the axis line (contact tolerance as in
// side_contacts).
double off_axis_boundary(const Polygon& p, const AxisLine& axis);

// Union of p with its mirror image across the axis. p must lie in the
// closed half-plane and touch the axis along exactly one contiguous run of
// edges of positive length. Doubles the area; the off-axis boundary length
// also doubles. Vertex-path surgery along the shared run, no general
// boolean ops.
Polygon reflect_half_plane(const Polygon& p, const AxisLine& axis);

// Mirror p into all four quadrants around the corner: two successive
// half-plane reflections. Quadruples area and free boundary length. p must
// touch both rays along contact runs through the apex (otherwise the union
// pinches and is rejected).
Polygon reflect_quarter_plane(const Polygon& p, const CornerFrame& corner);

} // namespace fenceopt
