#include "fenceopt/bounds.hpp"

#include <cmath>

namespace fenceopt {

std::string to_string(TouchClass tc) {
    switch (tc) {
        case TouchClass::Zero: return "zero";
        case TouchClass::One: return "one";
        case TouchClass::TwoAdjacent: return "two-adjacent";
        case TouchClass::TwoOpposite: return "two-opposite";
        case TouchClass::Three: return "three";
        case TouchClass::Four: return "four";
    }
    return "?";
}

std::string to_string(Regime r) {
    switch (r) {
        case Regime::QuarterDisk: return "quarter-disk";
        case Regime::StraightCut: return "straight-cut";
        case Regime::ComplementQuarterDisk: return "complement-quarter-disk";
    }
    return "?";
}

namespace {
void require_nonnegative_area(double a) {
    if (!(a >= 0.0)) throw DomainError("area must be nonnegative");
}
void require_within_rect(const Rect& rect, double a) {
    if (!(a >= 0.0) || !(a <= rect.area()))
        throw DomainError("area must lie in [0, rect.area()]");
}
} // namespace

double iso_lower_plane(double a) {
    require_nonnegative_area(a);
    return 2.0 * std::sqrt(M_PI * a);
}

double iso_lower_half_plane(double a) {
    require_nonnegative_area(a);
    return std::sqrt(2.0 * M_PI * a);
}

double iso_lower_quarter_plane(double a) {
    require_nonnegative_area(a);
    return std::sqrt(M_PI * a);
}

double case_lower_bound(TouchClass tc, const Rect& rect, double a) {
    require_within_rect(rect, a);
    switch (tc) {
        case TouchClass::Zero: return iso_lower_plane(a);
        case TouchClass::One: return iso_lower_half_plane(a);
        case TouchClass::TwoAdjacent: return iso_lower_quarter_plane(a);
        case TouchClass::TwoOpposite: return 2.0 * rect.x();
        case TouchClass::Three: return rect.x();
        case TouchClass::Four: return iso_lower_quarter_plane(rect.area() - a);
    }
    throw DomainError("unknown touch class");
}

double l_star(const Rect& rect, double a) {
    require_within_rect(rect, a);
    const double x = rect.x();
    const double threshold = x * x / M_PI;
    if (a < threshold) return iso_lower_quarter_plane(a);
    if (a > rect.area() - threshold) return iso_lower_quarter_plane(rect.area() - a);
    return x;
}

Regime regime(const Rect& rect, double a) {
    require_within_rect(rect, a);
    const double threshold = rect.x() * rect.x() / M_PI;
    if (a < threshold) return Regime::QuarterDisk;
    if (a > rect.area() - threshold) return Regime::ComplementQuarterDisk;
    return Regime::StraightCut;
}

double max_sum_sqrt(int k, double a_total) {
    if (k < 1) throw DomainError("partition needs at least one part");
    require_nonnegative_area(a_total);
    return std::sqrt(static_cast<double>(k) * a_total);
}

double sum_sqrt_lower(std::span<const double> parts) {
    double sum = 0.0;
    for (double p : parts) {
        if (!(p > 0.0)) throw DomainError("partition parts must be positive");
        sum += std::sqrt(p);
    }
    return sum;
}

} // namespace fenceopt
