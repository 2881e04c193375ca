#include "fenceopt/oracle.hpp"

#include <algorithm>
#include <string>

#include "fenceopt/errors.hpp"

namespace fenceopt {

namespace {

struct Esu {
    const GridDomain& d;
    int k;
    std::vector<char> in_sub;
    std::vector<char> closed;  // in subset or adjacent to it (anchor-filtered)
    std::vector<int> sub;
    OracleResult best;
    std::uint64_t count = 0;

    explicit Esu(const GridDomain& dom, int size)
        : d(dom),
          k(size),
          in_sub(static_cast<std::size_t>(dom.cell_count()), 0),
          closed(static_cast<std::size_t>(dom.cell_count()), 0) {
        best.units = -1;
        sub.reserve(static_cast<std::size_t>(size));
    }

    int neighbors(int idx, int out[4]) const {
        const int col = idx % d.cols;
        const int row = idx / d.cols;
        int n = 0;
        if (col > 0) out[n++] = idx - 1;
        if (col + 1 < d.cols) out[n++] = idx + 1;
        if (row > 0) out[n++] = idx - d.cols;
        if (row + 1 < d.rows) out[n++] = idx + d.cols;
        return n;
    }

    void visit() {
        ++count;
        int units = 0;
        int nb[4];
        for (int idx : sub) {
            const int n = neighbors(idx, nb);
            for (int i = 0; i < n; ++i)
                if (!in_sub[static_cast<std::size_t>(nb[i])]) ++units;
        }
        if (best.units >= 0 && units > best.units) return;
        std::vector<int> sorted = sub;
        std::sort(sorted.begin(), sorted.end());
        if (best.units < 0 || units < best.units ||
            (units == best.units && sorted < best.witness.cells)) {
            best.units = units;
            best.witness.cells = std::move(sorted);
        }
    }

    void extend(std::vector<int> ext, int anchor) {
        if (static_cast<int>(sub.size()) == k) {
            visit();
            return;
        }
        int nb[4];
        while (!ext.empty()) {
            const int w = ext.back();
            ext.pop_back();
            // Exclusive neighbors of w: unseen from the current subset, above the anchor.
            int added[4];
            int added_n = 0;
            const int n = neighbors(w, nb);
            for (int i = 0; i < n; ++i) {
                const int u = nb[i];
                if (u > anchor && !closed[static_cast<std::size_t>(u)]) {
                    closed[static_cast<std::size_t>(u)] = 1;
                    added[added_n++] = u;
                }
            }
            sub.push_back(w);
            in_sub[static_cast<std::size_t>(w)] = 1;
            std::vector<int> next = ext;
            next.insert(next.end(), added, added + added_n);
            extend(std::move(next), anchor);
            in_sub[static_cast<std::size_t>(w)] = 0;
            sub.pop_back();
            for (int i = 0; i < added_n; ++i) closed[static_cast<std::size_t>(added[i])] = 0;
        }
    }

    void run() {
        int nb[4];
        for (int v = 0; v < d.cell_count(); ++v) {
            closed[static_cast<std::size_t>(v)] = 1;
            std::vector<int> ext;
            const int n = neighbors(v, nb);
            for (int i = 0; i < n; ++i)
                if (nb[i] > v) {
                    closed[static_cast<std::size_t>(nb[i])] = 1;
                    ext.push_back(nb[i]);
                }
            sub.push_back(v);
            in_sub[static_cast<std::size_t>(v)] = 1;
            extend(std::move(ext), v);
            in_sub[static_cast<std::size_t>(v)] = 0;
            sub.pop_back();
            for (int i = 0; i < n; ++i)
                if (nb[i] > v) closed[static_cast<std::size_t>(nb[i])] = 0;
            closed[static_cast<std::size_t>(v)] = 0;
        }
    }
};

} // namespace

OracleResult oracle_min_free_perimeter(const GridDomain& d, int k, int max_cells) {
    d.validate();
    const int total = d.cell_count();
    if (k < 0 || k > total) throw DomainError("k outside [0, cols*rows]");
    if (total > max_cells)
        throw CapacityError("grid has " + std::to_string(total) +
                            " cells, above the enumeration cap of " + std::to_string(max_cells) +
                            "; use anneal_min_free_perimeter");

    OracleResult r;
    if (k == 0) {
        r.enumerated = 1;
        return r;  // empty shape, zero free perimeter
    }
    if (k == total) {
        r.witness.cells.resize(static_cast<std::size_t>(total));
        for (int i = 0; i < total; ++i) r.witness.cells[static_cast<std::size_t>(i)] = i;
        r.enumerated = 1;
        return r;
    }

    Esu esu(d, k);
    esu.run();
    r = std::move(esu.best);
    r.enumerated = esu.count;
    r.length = d.cell * r.units;
    return r;
}

} // namespace fenceopt
