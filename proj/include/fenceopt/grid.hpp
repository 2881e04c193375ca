#pragma once
#include <random>
#include <utility>
#include <vector>

#include "fenceopt/rect.hpp"

namespace fenceopt {

// Discretization of the rectangle into cols x rows square cells of side
// `cell`. Cells are addressed row-major: index = row * cols + col, with
// col counted along side X and row along side Y.
struct GridDomain {
    int cols{1};
    int rows{1};
    double cell{1.0};

    int cell_count() const { return cols * rows; }
    void validate() const;
};

// The rectangle the grid tiles (side order normalized by Rect).
Rect domain_rect(const GridDomain& d);

inline int cell_index(const GridDomain& d, int col, int row) { return row * d.cols + col; }
inline std::pair<int, int> cell_colrow(const GridDomain& d, int idx) {
    return {idx % d.cols, idx / d.cols};
}

// A subset of domain cells held as sorted, duplicate-free row-major indices.
struct GridShape {
    std::vector<int> cells;

    int size() const { return static_cast<int>(cells.size()); }
    void normalize();  // sort + unique
};

GridShape shape_from_cells(const GridDomain& d, const std::vector<std::pair<int, int>>& colrow);

// Throws DomainError when an index is out of range or the list is not
// sorted and duplicate-free.
void validate_shape(const GridShape& g, const GridDomain& d);

bool shape_is_connected(const GridShape& g, const GridDomain& d);

// Number of unit cell-edges separating a cell of g from a domain cell not
// in g. Edges lying on the domain border are never counted.
int grid_free_perimeter_units(const GridShape& g, const GridDomain& d);
double grid_free_perimeter(const GridShape& g, const GridDomain& d);

// Classifies g by the set of domain sides carrying at least one g-cell edge.
TouchClass grid_touch_class(const GridShape& g, const GridDomain& d);

// 4-connected components of the complement, each returned as a shape.
// Their free perimeters sum to grid_free_perimeter(g) exactly.
std::vector<GridShape> complement_components(const GridShape& g, const GridDomain& d);

// Uniformly seeded boundary-growth sampler; always returns a connected
// k-cell shape. Used by property tests and the verification campaign.
GridShape random_connected_shape(const GridDomain& d, int k, std::mt19937_64& rng);

} // namespace fenceopt
