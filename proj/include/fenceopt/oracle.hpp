#pragma once
#include <cstdint>

#include "fenceopt/grid.hpp"

namespace fenceopt {

struct OracleResult {
    int units{0};
    double length{0.0};
    GridShape witness;
    std::uint64_t enumerated{0};  // connected k-cell subsets visited
};

// Exact minimum free perimeter over all connected k-cell subsets of the
// domain, found by canonical connected-subgraph enumeration (anchor cell
// plus exclusive-neighbor extension, so every subset is visited once).
// Ties are broken toward the lexicographically least sorted cell list.
// Domains with more than max_cells cells throw CapacityError; use
// anneal_min_free_perimeter there instead.
OracleResult oracle_min_free_perimeter(const GridDomain& d, int k, int max_cells = 24);

} // namespace fenceopt
