#include "fenceopt/geom.hpp"

#include <algorithm>

namespace fenceopt {

namespace {

int orientation(Point a, Point b, Point c) {
    double v = cross(b - a, c - a);
    if (v > 0.0) return 1;
    if (v < 0.0) return -1;
    return 0;
}

bool on_segment_collinear(Point a, Point b, Point p) {
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

} // namespace

bool segments_cross(Point a1, Point a2, Point b1, Point b2) {
    int o1 = orientation(a1, a2, b1);
    int o2 = orientation(a1, a2, b2);
    int o3 = orientation(b1, b2, a1);
    int o4 = orientation(b1, b2, a2);

    if (o1 != o2 && o3 != o4) return true;

    // Collinear overlap counts as a crossing for simplicity purposes.
    if (o1 == 0 && on_segment_collinear(a1, a2, b1)) return true;
    if (o2 == 0 && on_segment_collinear(a1, a2, b2)) return true;
    if (o3 == 0 && on_segment_collinear(b1, b2, a1)) return true;
    if (o4 == 0 && on_segment_collinear(b1, b2, a2)) return true;
    return false;
}

bool loop_is_simple(std::span<const Point> pts) {
    const std::size_t n = pts.size();
    if (n < 3) return false;
    for (std::size_t i = 0; i < n; ++i) {
        Point a1 = pts[i];
        Point a2 = pts[(i + 1) % n];
        if (a1.x == a2.x && a1.y == a2.y) return false; // zero-length edge
        for (std::size_t j = i + 1; j < n; ++j) {
            bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            if (adjacent) continue;
            Point b1 = pts[j];
            Point b2 = pts[(j + 1) % n];
            if (segments_cross(a1, a2, b1, b2)) return false;
        }
    }
    return true;
}

} // namespace fenceopt
