#include "fenceopt/fence_geometry.hpp"

#include <cmath>

#include "fenceopt/bounds.hpp"
#include "fenceopt/io.hpp"

namespace fenceopt {

namespace {
const char* corner_name(Corner c) {
    switch (c) {
        case Corner::Origin: return "origin";
        case Corner::ShortEnd: return "short-end";
        case Corner::Far: return "far";
        case Corner::LongEnd: return "long-end";
    }
    return "?";
}
} // namespace

double fence_length(const FenceGeometry& g, const Rect& rect) {
    return std::visit(
        [&](const auto& v) -> double {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, StraightCut>) return rect.x();
            if constexpr (std::is_same_v<T, QuarterArc>) return 0.5 * M_PI * v.radius;
            return 0.0;
        },
        g);
}

double fence_enclosed_area(const FenceGeometry& g, const Rect& rect) {
    return std::visit(
        [&](const auto& v) -> double {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, StraightCut>) return rect.x() * v.offset;
            if constexpr (std::is_same_v<T, QuarterArc>) {
                double arc_area = 0.25 * M_PI * v.radius * v.radius;
                return v.encloses_complement ? rect.area() - arc_area : arc_area;
            }
            if constexpr (std::is_same_v<T, NoFence>) return v.full ? rect.area() : 0.0;
            return 0.0;
        },
        g);
}

void validate_fence(const FenceGeometry& g, const Rect& rect) {
    std::visit(
        [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, StraightCut>) {
                if (!(v.offset >= 0.0) || !(v.offset <= rect.y()))
                    throw DomainError("straight cut offset outside [0, y]");
            }
            if constexpr (std::is_same_v<T, QuarterArc>) {
                const double max_radius = 2.0 * rect.x() / M_PI;
                if (!(v.radius > 0.0) || !(v.radius <= max_radius * (1.0 + 1e-12)))
                    throw DomainError("quarter arc radius outside (0, 2x/pi]");
            }
        },
        g);
}

FenceGeometry optimal_fence(const Rect& rect, double a) {
    switch (regime(rect, a)) {
        case Regime::QuarterDisk:
            if (a == 0.0) return NoFence{false};
            return QuarterArc{Corner::Origin, 2.0 * std::sqrt(a / M_PI), false};
        case Regime::ComplementQuarterDisk: {
            const double rest = rect.area() - a;
            if (rest == 0.0) return NoFence{true};
            return QuarterArc{Corner::Origin, 2.0 * std::sqrt(rest / M_PI), true};
        }
        case Regime::StraightCut:
        default:
            return StraightCut{a / rect.x()};
    }
}

std::string describe(const FenceGeometry& g) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, StraightCut>)
                return "straight-cut:offset=" + fmt_double(v.offset);
            if constexpr (std::is_same_v<T, QuarterArc>) {
                std::string head = v.encloses_complement ? "quarter-arc-complement" : "quarter-arc";
                return head + ":corner=" + corner_name(v.corner) +
                       ",radius=" + fmt_double(v.radius);
            }
            if constexpr (std::is_same_v<T, NoFence>)
                return v.full ? std::string("full") : std::string("empty");
            return "?";
        },
        g);
}

} // namespace fenceopt
