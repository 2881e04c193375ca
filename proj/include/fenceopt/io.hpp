#pragma once
#include <ostream>
#include <string>

#include "fenceopt/rect.hpp"

namespace fenceopt {

// Shortest decimal string that round-trips to the same double.
std::string fmt_double(double v);

// Fixed significant-digit formatting (labels, SVG text).
std::string fmt_sig(double v, int digits);

// CSV sweep of l_star over [0, xy]: header `area,lstar,regime`, `samples`
// uniformly spaced rows including both endpoints, plus the two regime
// threshold areas inserted as exact rows.
void write_curve_csv(std::ostream& out, const Rect& rect, int samples);

// SVG of the rectangle and the optimal fence for area a. Long side y runs
// horizontally, short side x vertically, origin at the top-left.
void write_fence_svg(std::ostream& out, const Rect& rect, double a);

} // namespace fenceopt
