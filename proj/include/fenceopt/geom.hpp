#pragma once
#include <cmath>
#include <span>
#include <vector>

namespace fenceopt {

struct Point {
    double x{0.0};
    double y{0.0};
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double dist(Point a, Point b) { return norm(a - b); }

// 90-degree counter-clockwise rotation.
inline Point rot90(Point a) { return {-a.y, a.x}; }
// Perpendicular used by the shoelace gradient: (w.y, -w.x).
inline Point perp(Point a) { return {a.y, -a.x}; }

inline Point normalized(Point a) {
    double n = norm(a);
    return n > 0.0 ? Point{a.x / n, a.y / n} : Point{0.0, 0.0};
}

// Signed area of a closed polygonal loop (positive for counter-clockwise).
inline double shoelace(std::span<const Point> pts) {
    double twice = 0.0;
    const std::size_t n = pts.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = pts[i];
        const Point& b = pts[(i + 1) % n];
        twice += a.x * b.y - a.y * b.x;
    }
    return 0.5 * twice;
}

inline double polyline_length(std::span<const Point> pts) {
    double len = 0.0;
    for (std::size_t i = 1; i < pts.size(); ++i) len += dist(pts[i - 1], pts[i]);
    return len;
}

// Whether the closed segments share any point: proper crossings, shared
// endpoints, vertex-on-edge contact, and collinear overlap all count.
bool segments_cross(Point a1, Point a2, Point b1, Point b2);

// A closed loop is simple if no two non-adjacent edges intersect and no
// vertex (other than shared edge endpoints) lies on another edge.
bool loop_is_simple(std::span<const Point> pts);

} // namespace fenceopt
