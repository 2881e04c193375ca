#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "doctest.h"
#include "fenceopt/bounds.hpp"
#include "fenceopt/errors.hpp"
#include "fenceopt/oracle.hpp"

using namespace fenceopt;

namespace {

// Brute-force reference: scan all 2^N subsets with bitmasks, no pruning,
// and track connected-subset count and minimum free perimeter per size.
struct RawScan {
    std::vector<int> min_units;       // by k; -1 when no connected subset
    std::vector<std::uint64_t> count; // connected subsets by k
};

RawScan raw_scan(const GridDomain& d) {
    const int n = d.cell_count();
    RawScan out;
    out.min_units.assign(static_cast<std::size_t>(n) + 1, -1);
    out.count.assign(static_cast<std::size_t>(n) + 1, 0);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        const int k = __builtin_popcount(mask);
        if (k > 0) {
            // flood fill from the lowest set bit
            const int start = __builtin_ctz(mask);
            std::uint32_t seen = 1u << start;
            std::vector<int> stack{start};
            while (!stack.empty()) {
                const int idx = stack.back();
                stack.pop_back();
                const auto [c, r] = cell_colrow(d, idx);
                const int steps[4][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
                for (const auto& s : steps) {
                    const int nc = c + s[0], nr = r + s[1];
                    if (nc < 0 || nc >= d.cols || nr < 0 || nr >= d.rows) continue;
                    const int ni = cell_index(d, nc, nr);
                    if ((mask >> ni & 1u) && !(seen >> ni & 1u)) {
                        seen |= 1u << ni;
                        stack.push_back(ni);
                    }
                }
            }
            if (seen != mask) continue;
        }
        GridShape g;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1u) g.cells.push_back(i);
        const int units = grid_free_perimeter_units(g, d);
        ++out.count[static_cast<std::size_t>(k)];
        int& best = out.min_units[static_cast<std::size_t>(k)];
        if (best < 0 || units < best) best = units;
    }
    return out;
}

} // namespace

TEST_SUITE("oracle") {

TEST_CASE("frozen minima on the 3x4 unit grid") {
    const GridDomain d{3, 4, 1.0};
    const int expected_units[13] = {0, 2, 3, 3, 4, 4, 3, 4, 4, 3, 3, 2, 0};
    for (int k = 0; k <= 12; ++k) {
        const OracleResult r = oracle_min_free_perimeter(d, k);
        CHECK(r.units == expected_units[k]);
        CHECK(r.length == static_cast<double>(r.units));
        CHECK(r.witness.size() == k);
        CHECK(shape_is_connected(r.witness, d));
        CHECK(grid_free_perimeter_units(r.witness, d) == r.units);
    }
}

TEST_CASE("straight strips are optimal at the cut sizes") {
    const GridDomain d{3, 4, 1.0};
    const OracleResult k3 = oracle_min_free_perimeter(d, 3);
    CHECK(k3.units == 3);
    CHECK(k3.witness.cells == std::vector<int>{0, 1, 2});  // bottom strip
    CHECK(k3.enumerated == 34);
    const OracleResult k6 = oracle_min_free_perimeter(d, 6);
    CHECK(k6.units == 3);
    CHECK(k6.witness.cells == std::vector<int>{0, 1, 2, 3, 4, 5});
    CHECK(k6.enumerated == 181);
    const OracleResult k9 = oracle_min_free_perimeter(d, 9);
    CHECK(k9.units == 3);
    CHECK(k9.enumerated == 160);
}

TEST_CASE("the four dominoes of the 2x2 grid") {
    const GridDomain d{2, 2, 1.0};
    const OracleResult r = oracle_min_free_perimeter(d, 2);
    CHECK(r.units == 2);
    CHECK(r.enumerated == 4);
    CHECK(r.witness.cells == std::vector<int>{0, 1});  // lexicographic tie-break
}

TEST_CASE("matches a raw subset scan on small grids") {
    for (const GridDomain& d : {GridDomain{2, 3, 1.0}, GridDomain{3, 3, 1.0}}) {
        const RawScan ref = raw_scan(d);
        for (int k = 0; k <= d.cell_count(); ++k) {
            const OracleResult r = oracle_min_free_perimeter(d, k);
            CHECK(r.units == ref.min_units[static_cast<std::size_t>(k)]);
            CHECK(r.enumerated == ref.count[static_cast<std::size_t>(k)]);
        }
    }
}

TEST_CASE("complement symmetry of the minima on 3x4") {
    // free edges of a shape and of its complement are the same edge set, and
    // on this grid every optimum has a connected complement
    const GridDomain d{3, 4, 1.0};
    for (int k = 0; k <= 12; ++k)
        CHECK(oracle_min_free_perimeter(d, k).units ==
              oracle_min_free_perimeter(d, 12 - k).units);
}

TEST_CASE("bracketing against the continuous bound") {
    const GridDomain d{3, 4, 1.0};
    const Rect rect = domain_rect(d);
    for (int k = 0; k <= 12; ++k) {
        const OracleResult r = oracle_min_free_perimeter(d, k);
        CHECK(r.length >= l_star(rect, static_cast<double>(k)) - 1e-9);
    }
}

TEST_CASE("cell side scales the reported length") {
    const GridDomain d{3, 4, 0.5};
    const OracleResult r = oracle_min_free_perimeter(d, 3);
    CHECK(r.units == 3);
    CHECK(r.length == 1.5);
}

TEST_CASE("edge sizes") {
    const GridDomain d{3, 4, 1.0};
    const OracleResult none = oracle_min_free_perimeter(d, 0);
    CHECK(none.units == 0);
    CHECK(none.witness.size() == 0);
    CHECK(none.enumerated == 1);
    const OracleResult all = oracle_min_free_perimeter(d, 12);
    CHECK(all.units == 0);
    CHECK(all.witness.size() == 12);
    CHECK(all.enumerated == 1);
}

TEST_CASE("capacity cap") {
    const GridDomain big{5, 6, 1.0};
    CHECK_THROWS_AS(oracle_min_free_perimeter(big, 5), CapacityError);
    CHECK_THROWS_WITH_AS(oracle_min_free_perimeter(big, 5),
                         doctest::Contains("anneal_min_free_perimeter"), CapacityError);
    // explicit override lifts the cap
    const GridDomain d55{5, 5, 1.0};
    CHECK_THROWS_AS(oracle_min_free_perimeter(d55, 2), CapacityError);
    const OracleResult r = oracle_min_free_perimeter(d55, 2, 25);
    CHECK(r.units == 3);
    CHECK_THROWS_AS(oracle_min_free_perimeter(d55, -1, 25), DomainError);
    CHECK_THROWS_AS(oracle_min_free_perimeter(d55, 26, 25), DomainError);
}

} // TEST_SUITE
