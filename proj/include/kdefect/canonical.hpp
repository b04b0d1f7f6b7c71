#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "kdefect/graph.hpp"

namespace kdefect {

namespace detail {

/// Scratch state for the canonical-form search over one multigraph.
struct CanonSearch {
    int n;
    std::vector<int> loops;               // loop count per vertex
    std::vector<std::vector<int>> mult;   // off-diagonal multiplicities
    std::string best;
    bool have_best = false;

    explicit CanonSearch(const Graph& g)
        : n(g.vertex_count()), loops(n, 0), mult(n, std::vector<int>(n, 0)) {
        for (const Edge& e : g.edges()) {
            if (e.u == e.v) {
                ++loops[e.u];
            } else {
                ++mult[e.u][e.v];
                ++mult[e.v][e.u];
            }
        }
    }

    using Cells = std::vector<std::vector<int>>;

    /// Equitable refinement: split cells by (loop count, multiplicity sum
    /// into every cell) until nothing moves. Cell order is preserved and
    /// split parts are ordered by signature, so the result is canonical
    /// for the input partition.
    Cells refine(Cells cells) const {
        bool changed = true;
        while (changed) {
            changed = false;
            std::vector<std::vector<int>> sig(n);
            for (int c = 0; c < (int)cells.size(); ++c)
                for (int v : cells[c]) {
                    sig[v].assign(cells.size() + 1, 0);
                    sig[v][0] = loops[v];
                    for (int d = 0; d < (int)cells.size(); ++d)
                        for (int u : cells[d])
                            if (u != v) sig[v][d + 1] += mult[v][u];
                }
            Cells next;
            for (auto& cell : cells) {
                if (cell.size() == 1) {
                    next.push_back(cell);
                    continue;
                }
                std::vector<int> sorted = cell;
                std::sort(sorted.begin(), sorted.end(), [&](int a, int b) {
                    return sig[a] != sig[b] ? sig[a] < sig[b] : a < b;
                });
                size_t i = 0;
                while (i < sorted.size()) {
                    size_t j = i;
                    while (j < sorted.size() && sig[sorted[j]] == sig[sorted[i]]) ++j;
                    next.emplace_back(sorted.begin() + i, sorted.begin() + j);
                    if (j - i != cell.size()) changed = true;
                    i = j;
                }
            }
            cells = std::move(next);
        }
        return cells;
    }

    /// True when every two members of the cell are interchangeable: equal
    /// loop counts, one common multiplicity inside the cell, and identical
    /// multiplicity toward every outside vertex. Ordering such a cell
    /// arbitrarily cannot change the emitted key, so no branching is needed.
    bool mutually_twin(const std::vector<int>& cell) const {
        int a = cell[0];
        for (int v : cell)
            if (loops[v] != loops[a]) return false;
        int inside = mult[a][cell[1]];
        for (size_t i = 0; i < cell.size(); ++i)
            for (size_t j = i + 1; j < cell.size(); ++j)
                if (mult[cell[i]][cell[j]] != inside) return false;
        std::vector<char> in_cell(n, 0);
        for (int v : cell) in_cell[v] = 1;
        for (int w = 0; w < n; ++w) {
            if (in_cell[w]) continue;
            for (int v : cell)
                if (mult[v][w] != mult[a][w]) return false;
        }
        return true;
    }

    void emit(const Cells& cells) {
        std::string key;
        key.reserve(1 + n + n * (n - 1) / 2);
        std::vector<int> order;
        for (auto& cell : cells) order.push_back(cell[0]);
        key.push_back((char)n);
        for (int v : order) key.push_back((char)loops[v]);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) key.push_back((char)mult[order[i]][order[j]]);
        if (!have_best || key < best) {
            best = std::move(key);
            have_best = true;
        }
    }

    void search(Cells cells) {
        cells = refine(std::move(cells));
        int target = -1;
        for (int c = 0; c < (int)cells.size(); ++c)
            if (cells[c].size() > 1) {
                target = c;
                break;
            }
        if (target < 0) {
            emit(cells);
            return;
        }
        if (mutually_twin(cells[target])) {
            Cells next(cells.begin(), cells.begin() + target);
            for (int v : cells[target]) next.push_back({v});
            next.insert(next.end(), cells.begin() + target + 1, cells.end());
            search(std::move(next));
            return;
        }
        for (int v : cells[target]) {
            Cells next(cells.begin(), cells.begin() + target);
            next.push_back({v});
            std::vector<int> rest;
            for (int u : cells[target])
                if (u != v) rest.push_back(u);
            next.push_back(std::move(rest));
            next.insert(next.end(), cells.begin() + target + 1, cells.end());
            search(std::move(next));
        }
    }
};

} // namespace detail

/// Canonical byte string for multigraph isomorphism: two graphs get equal
/// keys exactly when an isomorphism matches them loop and multiplicity
/// included. Costs grow quickly with symmetry, so graphs with more than 10
/// vertices get nullopt and callers fall back to not memoizing.
inline std::optional<std::string> canonical_key(const Graph& g) {
    int n = g.vertex_count();
    if (n > 10) return std::nullopt;
    if (n == 0) return std::string(1, '\0');
    detail::CanonSearch s(g);
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    s.search({all});
    return s.best;
}

} // namespace kdefect
