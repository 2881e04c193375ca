#pragma once
#include <cstdint>
#include <span>

#include "fenceopt/polyline.hpp"

namespace fenceopt {

struct OptimizerConfig {
    int max_iter{5000};          // total candidate evaluations
    double step{0.05};           // initial descent step, length units
    double penalty_init{10.0};   // augmented-Lagrangian mu
    double penalty_growth{2.0};  // mu multiplier when the constraint stalls
    double tol_area{1e-6};       // |area - a| / (X*Y) for convergence
    double tol_grad{1e-3};       // projected-gradient norm for convergence
    std::uint64_t seed{0};
    int vertex_count{32};
};

struct OptimizeResult {
    FencePolyline fence;
    double length{0.0};
    double area{0.0};
    bool converged{false};
    int iterations{0};
    // Smallest fence_length / l_star(enclosed_area) over accepted iterates;
    // the analytic bound says this can never drop below 1 (mod rounding).
    double min_bound_ratio{0.0};
};

// Fence initializers for the three optimal regimes, targeting area a on
// Side::Left with vertex_count interior vertices. The straight cut hits a
// exactly; the staircases can trim one sampling-gap corner triangle.
FencePolyline init_straight_cut(const Rect& rect, double a, int vertex_count);
FencePolyline init_corner_staircase(const Rect& rect, double a, int vertex_count);
FencePolyline init_complement_corner(const Rect& rect, double a, int vertex_count);
FencePolyline init_for_regime(const Rect& rect, double a, int vertex_count);

// Seeded jitter of the interior vertices; retries with halved magnitude
// until the fence loop stays simple, so the result is always usable.
FencePolyline perturb(const FencePolyline& f, const Rect& rect, double magnitude,
                      std::uint64_t seed);

// Minimizes fence length subject to enclosed_area(Side::Left) == a with an
// augmented-Lagrangian gradient descent. Candidates producing non-simple
// loops or vertices outside the rectangle are rejected and the step halved;
// step underflow returns converged=false with the best iterate seen.
// Throws GeometryError if an accepted iterate ever beats the analytic
// lower bound beyond rounding, since that would disprove the formula.
OptimizeResult optimize(const Rect& rect, double a, const FencePolyline& init,
                        const OptimizerConfig& cfg);

// Independent restarts from perturbed regime initializers; returns the
// shortest result, ties broken toward the lowest seed.
OptimizeResult multi_start(const Rect& rect, double a, std::span<const std::uint64_t> seeds,
                           const OptimizerConfig& cfg);

} // namespace fenceopt
