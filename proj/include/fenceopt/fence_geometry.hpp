#pragma once
#include <string>
#include <variant>

#include "fenceopt/rect.hpp"

namespace fenceopt {

enum class Corner { Origin, ShortEnd, Far, LongEnd };
// Origin   = (0, 0)     ShortEnd = (x, 0)
// Far      = (x, y)     LongEnd  = (0, y)
// Constructions always use Corner::Origin; all four are equivalent by
// symmetry and the enum exists so a geometry can say which one it used.

// Segment parallel to the short side at `offset` along the long side; the
// enclosed region is the slab between the origin-side short edge and the cut.
struct StraightCut {
    double offset;
};

// Circular arc of a quarter circle centered at `corner`. The arc itself
// bounds area (pi/4)*radius^2; with encloses_complement set, the geometry's
// target region is everything else.
struct QuarterArc {
    Corner corner;
    double radius;
    bool encloses_complement{false};
};

// No fence at all: the empty shape, or (with `full`) the whole rectangle.
struct NoFence {
    bool full{false};
};

using FenceGeometry = std::variant<StraightCut, QuarterArc, NoFence>;

double fence_length(const FenceGeometry& g, const Rect& rect);
double fence_enclosed_area(const FenceGeometry& g, const Rect& rect);

// Throws DomainError if the geometry violates its invariants inside rect
// (offset outside [0, y], radius outside (0, 2x/pi]).
void validate_fence(const FenceGeometry& g, const Rect& rect);

// Optimal fence for area a in rect: a quarter arc at the origin corner in
// the quarter-disk regimes, a straight cut in between, nothing at a = 0
// or a = xy. Its length is l_star(rect, a) and it encloses exactly a.
FenceGeometry optimal_fence(const Rect& rect, double a);

// "straight-cut:offset=...", "quarter-arc:corner=origin,radius=...",
// "quarter-arc-complement:...", "empty" / "full".
std::string describe(const FenceGeometry& g);

} // namespace fenceopt
