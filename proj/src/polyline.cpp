#include "fenceopt/polyline.hpp"

#include <algorithm>
#include <cmath>

#include "fenceopt/errors.hpp"

namespace fenceopt {

double border_perimeter(const Rect& rect) { return 2.0 * (rect.x() + rect.y()); }

namespace {

double wrap_param(const Rect& rect, double t) {
    const double p = border_perimeter(rect);
    double w = std::fmod(t, p);
    if (w < 0.0) w += p;
    return w;
}

} // namespace

Point border_point(const Rect& rect, double t) {
    const double x = rect.x(), y = rect.y();
    const double w = wrap_param(rect, t);
    if (w < x) return {w, 0.0};
    if (w < x + y) return {x, w - x};
    if (w < 2.0 * x + y) return {x - (w - x - y), y};
    return {0.0, y - (w - 2.0 * x - y)};
}

Point border_tangent(const Rect& rect, double t) {
    const double x = rect.x(), y = rect.y();
    const double w = wrap_param(rect, t);
    if (w == 0.0) return {0.5, -0.5};  // corner sub-gradient: averaged side tangents
    if (w < x) return {1.0, 0.0};
    if (w == x) return {0.5, 0.5};
    if (w < x + y) return {0.0, 1.0};
    if (w == x + y) return {-0.5, 0.5};
    if (w < 2.0 * x + y) return {-1.0, 0.0};
    if (w == 2.0 * x + y) return {-0.5, -0.5};
    return {0.0, -1.0};
}

void validate_polyline(const FencePolyline& f, const Rect& rect) {
    const double p = border_perimeter(rect);
    for (double t : {f.t_start, f.t_end})
        if (!(t >= 0.0) || !(t < p)) throw DomainError("border parameter outside [0, 2(X+Y))");
    for (const Point& v : f.interior)
        if (!(v.x > 0.0) || !(v.x < rect.x()) || !(v.y > 0.0) || !(v.y < rect.y()))
            throw DomainError("interior vertex not strictly inside the rectangle");
}

std::vector<Point> fence_points(const FencePolyline& f, const Rect& rect) {
    std::vector<Point> pts;
    pts.reserve(f.interior.size() + 2);
    pts.push_back(border_point(rect, f.t_start));
    pts.insert(pts.end(), f.interior.begin(), f.interior.end());
    pts.push_back(border_point(rect, f.t_end));
    return pts;
}

namespace {

// Border corner points passed when walking counter-clockwise from `from`
// to `to`, in walk order; both endpoints excluded.
std::vector<Point> corners_between(const Rect& rect, double from, double to) {
    const double x = rect.x(), y = rect.y();
    const double p = border_perimeter(rect);
    const double f0 = wrap_param(rect, from);
    double span = std::fmod(to - from, p);
    if (span < 0.0) span += p;

    const double ct[4] = {0.0, x, x + y, 2.0 * x + y};
    const Point cp[4] = {{0.0, 0.0}, {x, 0.0}, {x, y}, {0.0, y}};
    struct Hit {
        double off;
        Point pt;
    };
    std::vector<Hit> hits;
    hits.reserve(4);
    for (int i = 0; i < 4; ++i) {
        double off = std::fmod(ct[i] - f0, p);
        if (off < 0.0) off += p;
        if (off > 0.0 && off < span) hits.push_back({off, cp[i]});
    }
    std::sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) { return a.off < b.off; });
    std::vector<Point> out;
    out.reserve(hits.size());
    for (const Hit& h : hits) out.push_back(h.pt);
    return out;
}

void drop_duplicate_corners(std::vector<Point>& loop) {
    std::vector<Point> out;
    out.reserve(loop.size());
    for (const Point& q : loop)
        if (out.empty() || q.x != out.back().x || q.y != out.back().y) out.push_back(q);
    while (out.size() > 1 && out.front().x == out.back().x && out.front().y == out.back().y)
        out.pop_back();
    loop = std::move(out);
}

} // namespace

std::vector<Point> closed_loop(const FencePolyline& f, const Rect& rect, Side side) {
    const auto pts = fence_points(f, rect);
    std::vector<Point> loop;
    if (side == Side::Left) {
        loop = pts;
        const auto corners = corners_between(rect, f.t_end, f.t_start);
        loop.insert(loop.end(), corners.begin(), corners.end());
    } else {
        loop.assign(pts.rbegin(), pts.rend());
        const auto corners = corners_between(rect, f.t_start, f.t_end);
        loop.insert(loop.end(), corners.begin(), corners.end());
    }
    drop_duplicate_corners(loop);
    return loop;
}

double fence_length(const FencePolyline& f, const Rect& rect) {
    const auto pts = fence_points(f, rect);
    return polyline_length(pts);
}

double enclosed_area(const FencePolyline& f, const Rect& rect, Side side) {
    const auto loop = closed_loop(f, rect, side);
    if (!loop_is_simple(loop)) throw GeometryError("fence loop self-intersects");
    return shoelace(loop);
}

Gradients gradients(const FencePolyline& f, const Rect& rect) {
    const auto pts = fence_points(f, rect);
    const std::size_t n = pts.size();
    const std::size_t dofs = 2 + 2 * f.interior.size();
    Gradients g;
    g.length.assign(dofs, 0.0);
    g.area.assign(dofs, 0.0);

    std::vector<Point> u(n - 1);  // forward segment directions
    for (std::size_t i = 0; i + 1 < n; ++i) u[i] = normalized(pts[i + 1] - pts[i]);

    const Point tan_start = border_tangent(rect, f.t_start);
    const Point tan_end = border_tangent(rect, f.t_end);

    g.length[0] = dot(-1.0 * u.front(), tan_start);
    g.length[1] = dot(u.back(), tan_end);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const Point gv = u[i - 1] - u[i];
        g.length[2 * i] = gv.x;
        g.length[2 * i + 1] = gv.y;
    }

    // Shoelace derivative: half the perpendicular of (next - prev) in the
    // Side::Left loop; border endpoints follow the border tangent.
    const auto corners = corners_between(rect, f.t_end, f.t_start);
    const Point prev_of_start = corners.empty() ? pts.back() : corners.back();
    const Point next_of_end = corners.empty() ? pts.front() : corners.front();

    const Point ga_start = 0.5 * perp(pts[1] - prev_of_start);
    const Point ga_end = 0.5 * perp(next_of_end - pts[n - 2]);
    g.area[0] = dot(ga_start, tan_start);
    g.area[1] = dot(ga_end, tan_end);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const Point gv = 0.5 * perp(pts[i + 1] - pts[i - 1]);
        g.area[2 * i] = gv.x;
        g.area[2 * i + 1] = gv.y;
    }
    return g;
}

} // namespace fenceopt
