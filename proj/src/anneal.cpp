#include "fenceopt/anneal.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "fenceopt/errors.hpp"

namespace fenceopt {

namespace {

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

// Serpentine fill: row 0 left-to-right, row 1 right-to-left, and so on.
// Consecutive cells are edge-adjacent, so every prefix is connected.
std::vector<int> serpentine_prefix(const GridDomain& d, int k) {
    std::vector<int> cells;
    cells.reserve(static_cast<std::size_t>(k));
    for (int row = 0; static_cast<int>(cells.size()) < k; ++row)
        for (int step = 0; step < d.cols && static_cast<int>(cells.size()) < k; ++step) {
            const int col = (row % 2 == 0) ? step : d.cols - 1 - step;
            cells.push_back(cell_index(d, col, row));
        }
    return cells;
}

struct Walker {
    const GridDomain& d;
    std::vector<char> in;
    std::vector<int> cells;   // unsorted working order
    std::vector<int> pos;     // cell index -> slot in cells, or -1
    int units = 0;

    Walker(const GridDomain& dom, const std::vector<int>& init)
        : d(dom),
          in(static_cast<std::size_t>(dom.cell_count()), 0),
          pos(static_cast<std::size_t>(dom.cell_count()), -1) {
        for (int c : init) insert(c);
        units = count_units();
    }

    void insert(int c) {
        pos[static_cast<std::size_t>(c)] = static_cast<int>(cells.size());
        cells.push_back(c);
        in[static_cast<std::size_t>(c)] = 1;
    }

    void erase(int c) {
        const int at = pos[static_cast<std::size_t>(c)];
        const int last = cells.back();
        cells[static_cast<std::size_t>(at)] = last;
        pos[static_cast<std::size_t>(last)] = at;
        cells.pop_back();
        pos[static_cast<std::size_t>(c)] = -1;
        in[static_cast<std::size_t>(c)] = 0;
    }

    int count_units() const {
        int u = 0;
        int nb[4];
        for (int c : cells) {
            const int n = neighbors_of(d, c, nb);
            for (int i = 0; i < n; ++i)
                if (!in[static_cast<std::size_t>(nb[i])]) ++u;
        }
        return u;
    }

    // Degree of idx into the current shape (membership of idx itself ignored).
    int shape_degree(int idx) const {
        int nb[4];
        const int n = neighbors_of(d, idx, nb);
        int s = 0;
        for (int i = 0; i < n; ++i) s += in[static_cast<std::size_t>(nb[i])];
        return s;
    }

    int domain_degree(int idx) const {
        int nb[4];
        return neighbors_of(d, idx, nb);
    }

    bool connected_without(int removed) {
        if (cells.size() <= 2) return true;
        if (shape_degree(removed) <= 1) return true;
        // Breadth-first over the shape minus `removed`.
        std::vector<char> seen(in.size(), 0);
        std::vector<int> queue;
        queue.reserve(cells.size());
        int start = cells[0] == removed ? cells[1] : cells[0];
        seen[static_cast<std::size_t>(start)] = 1;
        queue.push_back(start);
        std::size_t head = 0;
        int reached = 1;
        int nb[4];
        while (head < queue.size()) {
            const int c = queue[head++];
            const int n = neighbors_of(d, c, nb);
            for (int i = 0; i < n; ++i) {
                const int u = nb[i];
                if (u == removed) continue;
                if (in[static_cast<std::size_t>(u)] && !seen[static_cast<std::size_t>(u)]) {
                    seen[static_cast<std::size_t>(u)] = 1;
                    ++reached;
                    queue.push_back(u);
                }
            }
        }
        return reached == static_cast<int>(cells.size()) - 1;
    }
};

} // namespace

AnnealResult anneal_min_free_perimeter(const GridDomain& d, int k, std::uint64_t seed,
                                       const AnnealSchedule& schedule) {
    d.validate();
    if (k < 0 || k > d.cell_count()) throw DomainError("k outside [0, cols*rows]");
    if (schedule.sweeps < 0 || !(schedule.cooling > 0.0) || !(schedule.t0_factor > 0.0))
        throw DomainError("annealing schedule parameters must be positive");

    AnnealResult result;
    if (k == 0) return result;

    Walker w(d, serpentine_prefix(d, k));
    result.units = w.units;
    result.shape.cells = w.cells;
    result.shape.normalize();

    if (k <= 1 || k == d.cell_count()) {
        result.length = d.cell * result.units;
        return result;
    }

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<int> addable;
    int nb[4];

    double temp = schedule.t0_factor * d.cell;
    for (int sweep = 0; sweep < schedule.sweeps; ++sweep, temp *= schedule.cooling) {
        for (int step = 0; step < k; ++step) {
            ++result.proposed;
            std::uniform_int_distribution<std::size_t> pick_cell(0, w.cells.size() - 1);
            const int removed = w.cells[pick_cell(rng)];
            if (!w.connected_without(removed)) continue;

            // Candidate additions: empty cells adjacent to the shape minus `removed`.
            const int removed_delta = w.shape_degree(removed) - (w.domain_degree(removed) - w.shape_degree(removed));
            w.erase(removed);
            addable.clear();
            for (int c : w.cells) {
                const int n = neighbors_of(d, c, nb);
                for (int i = 0; i < n; ++i) {
                    const int u = nb[i];
                    if (!w.in[static_cast<std::size_t>(u)]) addable.push_back(u);
                }
            }
            std::sort(addable.begin(), addable.end());
            addable.erase(std::unique(addable.begin(), addable.end()), addable.end());
            if (addable.empty()) {  // k == 1 shapes only; restore and move on
                w.insert(removed);
                continue;
            }
            std::uniform_int_distribution<std::size_t> pick_add(0, addable.size() - 1);
            const int added = addable[pick_add(rng)];
            const int added_delta = (w.domain_degree(added) - w.shape_degree(added)) - w.shape_degree(added);
            const int new_units = w.units + removed_delta + added_delta;

            const double gain = d.cell * (new_units - w.units);
            if (gain <= 0.0 || coin(rng) < std::exp(-gain / temp)) {
                w.insert(added);
                w.units = new_units;
                ++result.accepted;
                if (w.units < result.units) {
                    result.units = w.units;
                    result.shape.cells = w.cells;
                    result.shape.normalize();
                }
            } else {
                w.insert(removed);
            }
        }
    }

    result.length = d.cell * result.units;
    return result;
}

} // namespace fenceopt
