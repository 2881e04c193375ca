#pragma once
#include <cstdint>

#include "fenceopt/grid.hpp"

namespace fenceopt {

struct AnnealSchedule {
    double t0_factor{2.0};  // initial temperature = t0_factor * cell
    double cooling{0.995};  // geometric factor applied once per sweep
    int sweeps{200};        // one sweep = k move proposals
};

struct AnnealResult {
    int units{0};
    double length{0.0};
    GridShape shape;  // best configuration seen, not the final one
    std::uint64_t proposed{0};
    std::uint64_t accepted{0};
};

// Simulated-annealing upper bound on the minimum free perimeter over
// connected k-cell shapes. Moves swap one boundary cell for a cell
// adjacent to the rest, rejecting swaps that disconnect the shape, so
// every visited configuration is feasible and the result is always
// >= the exact minimum. Deterministic for a fixed seed and schedule.
AnnealResult anneal_min_free_perimeter(const GridDomain& d, int k, std::uint64_t seed,
                                       const AnnealSchedule& schedule = {});

} // namespace fenceopt
