#pragma once
#include <vector>

#include "fenceopt/geom.hpp"
#include "fenceopt/rect.hpp"

namespace fenceopt {

// Open fence curve inside [0,X] x [0,Y]: the endpoints slide along the
// rectangle border (arc-length parameter t in [0, 2(X+Y)), counter-
// clockwise from the origin corner), interior vertices are free points
// strictly inside. The region the fence encloses is the one on its left
// when walking start -> end.
struct FencePolyline {
    double t_start{0.0};
    double t_end{0.0};
    std::vector<Point> interior;
};

enum class Side { Left, Right };

double border_perimeter(const Rect& rect);
Point border_point(const Rect& rect, double t);

// Unit tangent of the border in the direction of increasing t; exactly at
// a corner, the average of the two adjacent side tangents.
Point border_tangent(const Rect& rect, double t);

// Throws DomainError for parameters outside [0, 2(X+Y)) or interior
// vertices not strictly inside the rectangle.
void validate_polyline(const FencePolyline& f, const Rect& rect);

// Fence vertices: border start point, interior vertices, border end point.
std::vector<Point> fence_points(const FencePolyline& f, const Rect& rect);

// Closed boundary of the region on the given side of the fence, border
// corner points included, oriented counter-clockwise.
std::vector<Point> closed_loop(const FencePolyline& f, const Rect& rect, Side side);

double fence_length(const FencePolyline& f, const Rect& rect);

// Shoelace area of the side's closed loop; the two sides sum to
// rect.area(). Throws GeometryError when the loop self-intersects.
double enclosed_area(const FencePolyline& f, const Rect& rect, Side side);

// Per-degree-of-freedom derivatives, packed [t_start, t_end, v0.x, v0.y, ...].
// The area gradient refers to the Side::Left region.
struct Gradients {
    std::vector<double> length;
    std::vector<double> area;
};
Gradients gradients(const FencePolyline& f, const Rect& rect);

} // namespace fenceopt
