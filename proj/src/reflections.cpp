#include "fenceopt/reflections.hpp"

#include <algorithm>
#include <cmath>

#include "fenceopt/errors.hpp"

namespace fenceopt {

double signed_distance(const AxisLine& axis, Point q) {
    return cross(normalized(axis.dir), q - axis.origin);
}

Point mirror(const AxisLine& axis, Point q) {
    Point d = normalized(axis.dir);
    Point w = q - axis.origin;
    return axis.origin + 2.0 * dot(w, d) * d - w;
}

namespace {

double config_scale(const Polygon& p, const AxisLine& axis) {
    double s = 0.0;
    for (const Point& v : p.vertices) s = std::max(s, dist(v, axis.origin));
    return std::max(s, 1e-300);
}

struct ContactRun {
    std::size_t first; // index of the first on-axis vertex of the run
    std::size_t last;  // index of the last (circularly after first)
};

} // namespace

double off_axis_boundary(const Polygon& p, const AxisLine& axis) {
    const double tol = 1e-9 * config_scale(p, axis);
    double len = 0.0;
    const std::size_t n = p.vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = p.vertices[i];
        const Point& b = p.vertices[(i + 1) % n];
        const double d1 = signed_distance(axis, a);
        const double d2 = signed_distance(axis, b);
        const bool on = std::abs(d1) <= tol && std::abs(d2) <= tol && std::abs(d1 - d2) <= tol;
        if (!on) len += dist(a, b);
    }
    return len;
}

Polygon reflect_half_plane(const Polygon& p, const AxisLine& axis) {
    p.validate();
    const std::size_t n = p.vertices.size();
    const double tol = 1e-9 * config_scale(p, axis);

    std::vector<bool> on_axis(n);
    bool any_off = false;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = signed_distance(axis, p.vertices[i]);
        if (d < -tol) throw DomainError("polygon crosses the reflection axis");
        on_axis[i] = std::abs(d) <= tol;
        any_off = any_off || !on_axis[i];
    }
    if (!any_off) throw UnsupportedInputError("polygon is degenerate on the axis");

    // Maximal circular runs of consecutive on-axis vertices.
    std::vector<ContactRun> runs;
    std::size_t start_off = 0;
    while (on_axis[start_off]) ++start_off;
    for (std::size_t step = 0; step < n;) {
        std::size_t i = (start_off + step) % n;
        if (!on_axis[i]) {
            ++step;
            continue;
        }
        std::size_t len = 1;
        while (len < n && on_axis[(i + len) % n]) ++len;
        runs.push_back({i, (i + len - 1) % n});
        step += len;
    }
    if (runs.empty()) throw UnsupportedInputError("polygon does not touch the axis");

    auto run_has_edge = [&](const ContactRun& run) {
        for (std::size_t i = run.first; i != run.last; i = (i + 1) % n)
            if (dist(p.vertices[i], p.vertices[(i + 1) % n]) > tol) return true;
        return false;
    };

    std::size_t edge_runs = 0;
    const ContactRun* contact = nullptr;
    for (const ContactRun& run : runs)
        if (run_has_edge(run)) {
            ++edge_runs;
            contact = &run;
        }
    if (edge_runs == 0)
        throw UnsupportedInputError("polygon touches the axis only at isolated points");
    if (edge_runs > 1 || runs.size() > 1)
        throw UnsupportedInputError(
            "polygon touches the axis along disconnected contacts; the reflected union "
            "would not be a simple polygon");

    // Walk the off-axis path from the end of the contact run around to its
    // start, then back along the mirrored path.
    Polygon out;
    out.vertices.reserve(2 * n);
    for (std::size_t i = contact->last;; i = (i + 1) % n) {
        out.vertices.push_back(p.vertices[i]);
        if (i == contact->first) break;
    }
    const std::size_t off_count = out.vertices.size();
    for (std::size_t k = off_count - 1; k >= 1; --k) {
        if (k == off_count - 1) continue; // run start: fixed point, already present
        out.vertices.push_back(mirror(axis, out.vertices[k]));
    }
    return out;
}

Polygon reflect_quarter_plane(const Polygon& p, const CornerFrame& corner) {
    const AxisLine first{corner.apex, corner.dir};
    const AxisLine second{corner.apex, -1.0 * rot90(corner.dir)};
    const double tol = 1e-9 * config_scale(p, first);
    for (const Point& v : p.vertices) {
        if (signed_distance(first, v) < -tol || signed_distance(second, v) < -tol)
            throw DomainError("polygon is not contained in the quarter-plane");
    }
    return reflect_half_plane(reflect_half_plane(p, first), second);
}

} // namespace fenceopt
