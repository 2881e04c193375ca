#pragma once
#include <span>

#include "fenceopt/rect.hpp"

namespace fenceopt {

// Shortest boundary enclosing area a in the open plane: 2*sqrt(pi*a).
double iso_lower_plane(double a);

// Shortest free boundary for area a against a straight wall: sqrt(2*pi*a).
double iso_lower_half_plane(double a);

// Shortest free boundary for area a in a right-angle corner: sqrt(pi*a).
double iso_lower_quarter_plane(double a);

// Lower bound on the free perimeter of a shape of area a in rect, given how
// many rectangle sides it touches.
double case_lower_bound(TouchClass tc, const Rect& rect, double a);

// Minimum free perimeter over all shapes of area a inside rect:
//   sqrt(pi*a)            for a <= x^2/pi
//   x                     for x^2/pi <= a <= xy - x^2/pi
//   sqrt(pi*(xy - a))     for a >= xy - x^2/pi
double l_star(const Rect& rect, double a);

// Which branch of l_star applies. Exact threshold areas classify as
// StraightCut; both branches give x there.
Regime regime(const Rect& rect, double a);

// Maximum of sum(sqrt(A_i)) over partitions of a_total into k positive
// parts: sqrt(k*a_total), attained when all parts equal a_total/k.
double max_sum_sqrt(int k, double a_total);

// Direct evaluation of sum(sqrt(A_i)). Satisfies
// sqrt(sum parts) <= result <= sqrt(k * sum parts).
double sum_sqrt_lower(std::span<const double> parts);

} // namespace fenceopt
