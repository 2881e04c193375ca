#include "fenceopt/grid.hpp"

#include <algorithm>
#include <queue>

#include "fenceopt/errors.hpp"

namespace fenceopt {

void GridDomain::validate() const {
    if (cols < 1 || rows < 1) throw DomainError("grid needs at least one column and one row");
    if (!(cell > 0.0) || !std::isfinite(cell)) throw DomainError("cell side must be positive");
}

Rect domain_rect(const GridDomain& d) {
    d.validate();
    return Rect(d.cols * d.cell, d.rows * d.cell);
}

void GridShape::normalize() {
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
}

GridShape shape_from_cells(const GridDomain& d, const std::vector<std::pair<int, int>>& colrow) {
    GridShape g;
    g.cells.reserve(colrow.size());
    for (auto [c, r] : colrow) {
        if (c < 0 || c >= d.cols || r < 0 || r >= d.rows)
            throw DomainError("cell (col,row) outside the grid domain");
        g.cells.push_back(cell_index(d, c, r));
    }
    g.normalize();
    if (g.size() != static_cast<int>(colrow.size()))
        throw DomainError("duplicate cell in shape");
    return g;
}

void validate_shape(const GridShape& g, const GridDomain& d) {
    d.validate();
    int prev = -1;
    for (int idx : g.cells) {
        if (idx < 0 || idx >= d.cell_count()) throw DomainError("cell index outside the grid domain");
        if (idx <= prev) throw DomainError("shape cells must be sorted and duplicate-free");
        prev = idx;
    }
}

namespace {

std::vector<char> membership(const GridShape& g, const GridDomain& d) {
    std::vector<char> in(static_cast<std::size_t>(d.cell_count()), 0);
    for (int idx : g.cells) in[static_cast<std::size_t>(idx)] = 1;
    return in;
}

// In-domain 4-neighbors of idx, written into out[]; returns the count.
int neighbors_of(const GridDomain& d, int idx, int out[4]) {
    const int col = idx % d.cols;
    const int row = idx / d.cols;
    int n = 0;
    if (col > 0) out[n++] = idx - 1;
    if (col + 1 < d.cols) out[n++] = idx + 1;
    if (row > 0) out[n++] = idx - d.cols;
    if (row + 1 < d.rows) out[n++] = idx + d.cols;
    return n;
}

} // namespace

bool shape_is_connected(const GridShape& g, const GridDomain& d) {
    validate_shape(g, d);
    if (g.cells.empty()) return true;
    const auto in = membership(g, d);
    std::vector<char> seen(in.size(), 0);
    std::queue<int> q;
    q.push(g.cells.front());
    seen[static_cast<std::size_t>(g.cells.front())] = 1;
    int reached = 1;
    int nb[4];
    while (!q.empty()) {
        const int c = q.front();
        q.pop();
        const int n = neighbors_of(d, c, nb);
        for (int i = 0; i < n; ++i) {
            const auto u = static_cast<std::size_t>(nb[i]);
            if (in[u] && !seen[u]) {
                seen[u] = 1;
                ++reached;
                q.push(nb[i]);
            }
        }
    }
    return reached == g.size();
}

int grid_free_perimeter_units(const GridShape& g, const GridDomain& d) {
    validate_shape(g, d);
    const auto in = membership(g, d);
    int units = 0;
    int nb[4];
    for (int idx : g.cells) {
        const int n = neighbors_of(d, idx, nb);
        for (int i = 0; i < n; ++i)
            if (!in[static_cast<std::size_t>(nb[i])]) ++units;
    }
    return units;
}

double grid_free_perimeter(const GridShape& g, const GridDomain& d) {
    return d.cell * grid_free_perimeter_units(g, d);
}

TouchClass grid_touch_class(const GridShape& g, const GridDomain& d) {
    validate_shape(g, d);
    bool left = false, right = false, bottom = false, top = false;
    for (int idx : g.cells) {
        const int col = idx % d.cols;
        const int row = idx / d.cols;
        left |= col == 0;
        right |= col == d.cols - 1;
        bottom |= row == 0;
        top |= row == d.rows - 1;
    }
    const int sides = int(left) + int(right) + int(bottom) + int(top);
    switch (sides) {
        case 0: return TouchClass::Zero;
        case 1: return TouchClass::One;
        case 2: return ((left && right) || (bottom && top)) ? TouchClass::TwoOpposite
                                                            : TouchClass::TwoAdjacent;
        case 3: return TouchClass::Three;
        default: return TouchClass::Four;
    }
}

std::vector<GridShape> complement_components(const GridShape& g, const GridDomain& d) {
    validate_shape(g, d);
    const auto in = membership(g, d);
    std::vector<char> seen(in.size(), 0);
    std::vector<GridShape> comps;
    int nb[4];
    for (int start = 0; start < d.cell_count(); ++start) {
        const auto s = static_cast<std::size_t>(start);
        if (in[s] || seen[s]) continue;
        GridShape comp;
        std::queue<int> q;
        q.push(start);
        seen[s] = 1;
        while (!q.empty()) {
            const int c = q.front();
            q.pop();
            comp.cells.push_back(c);
            const int n = neighbors_of(d, c, nb);
            for (int i = 0; i < n; ++i) {
                const auto u = static_cast<std::size_t>(nb[i]);
                if (!in[u] && !seen[u]) {
                    seen[u] = 1;
                    q.push(nb[i]);
                }
            }
        }
        comp.normalize();
        comps.push_back(std::move(comp));
    }
    return comps;
}

GridShape random_connected_shape(const GridDomain& d, int k, std::mt19937_64& rng) {
    d.validate();
    if (k < 0 || k > d.cell_count()) throw DomainError("shape size outside [0, cols*rows]");
    GridShape g;
    if (k == 0) return g;

    std::vector<char> in(static_cast<std::size_t>(d.cell_count()), 0);
    std::vector<int> frontier;
    int nb[4];
    auto absorb = [&](int idx) {
        in[static_cast<std::size_t>(idx)] = 1;
        g.cells.push_back(idx);
        const int n = neighbors_of(d, idx, nb);
        for (int i = 0; i < n; ++i)
            if (!in[static_cast<std::size_t>(nb[i])]) frontier.push_back(nb[i]);
    };

    std::uniform_int_distribution<int> first(0, d.cell_count() - 1);
    absorb(first(rng));
    while (g.size() < k) {
        // The frontier may hold duplicates and already-absorbed cells; skip those.
        std::uniform_int_distribution<std::size_t> pick(0, frontier.size() - 1);
        const std::size_t at = pick(rng);
        const int cand = frontier[at];
        frontier[at] = frontier.back();
        frontier.pop_back();
        if (in[static_cast<std::size_t>(cand)]) continue;
        absorb(cand);
    }
    g.normalize();
    return g;
}

} // namespace fenceopt
