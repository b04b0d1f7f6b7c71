#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kdefect/canonical.hpp"
#include "kdefect/flats.hpp"
#include "kdefect/graph.hpp"
#include "kdefect/graph_io.hpp"
#include "kdefect/poly.hpp"

namespace kdefect {

/// Per-run cache of defect vectors keyed by canonical form. Purely an
/// accelerator: engines produce identical output with no cache at all.
class MemoCache {
public:
    const std::vector<Poly>* find(const std::string& key) {
        auto it = map_.find(key);
        if (it == map_.end()) {
            ++misses_;
            return nullptr;
        }
        ++hits_;
        return &it->second;
    }
    void insert(const std::string& key, std::vector<Poly> value) {
        map_.emplace(key, std::move(value));
    }
    long long hits() const { return hits_; }
    long long misses() const { return misses_; }
    size_t size() const { return map_.size(); }
    void clear() {
        map_.clear();
        hits_ = misses_ = 0;
    }

private:
    std::unordered_map<std::string, std::vector<Poly>> map_;
    long long hits_ = 0, misses_ = 0;
};

namespace detail {

/// base^exp, saturating just above cap so callers can test the guard.
inline long long ipow_capped(long long base, int exp, long long cap) {
    long long r = 1;
    for (int i = 0; i < exp; ++i) {
        if (r > cap / std::max(base, 1LL)) return cap + 1;
        r *= base;
    }
    return r;
}

/// Chromatic polynomial of one connected loop-free component via the
/// independent-set partition count: chi = sum_j p_j * x(x-1)...(x-j+1) where
/// p_j counts partitions of V into j independent blocks. Deliberately shares
/// nothing with the recursion engines.
inline Poly chromatic_component(const Graph& g) {
    int n = g.vertex_count();
    std::vector<uint32_t> adj(n, 0);
    for (const Edge& e : g.edges()) {
        adj[e.u] |= uint32_t(1) << e.v;
        adj[e.v] |= uint32_t(1) << e.u;
    }
    uint32_t full = (uint32_t(1) << n) - 1;
    std::vector<char> indep(full + 1);
    indep[0] = 1;
    for (uint32_t s = 1; s <= full; ++s) {
        int low = __builtin_ctz(s);
        uint32_t rest = s & (s - 1);
        indep[s] = indep[rest] && !(adj[low] & rest);
    }
    std::vector<long long> prev(full + 1, 0), cur(full + 1);
    prev[0] = 1;
    Poly out;
    for (int j = 1; j <= n; ++j) {
        std::fill(cur.begin(), cur.end(), 0LL);
        for (uint32_t s = 1; s <= full; ++s) {
            uint32_t low = uint32_t(1) << __builtin_ctz(s);
            uint32_t rest = s ^ low;
            long long total = 0;
            // every subset containing the lowest vertex of s becomes a block
            for (uint32_t sub = rest;; sub = (sub - 1) & rest) {
                if (indep[sub | low]) total += prev[s ^ (sub | low)];
                if (sub == 0) break;
            }
            cur[s] = total;
        }
        if (cur[full] != 0) out += Poly::falling_factorial(j).scaled(Int(cur[full]));
        std::swap(prev, cur);
    }
    return out;
}

} // namespace detail

/// Exact chromatic polynomial. A loop kills every coloring (zero polynomial);
/// parallel edges collapse; multiplicative over components.
inline Poly chromatic_poly(const Graph& g) {
    if (g.vertex_count() > 14)
        throw GuardError("chromatic_poly: n <= 14", "too many vertices for chromatic polynomial");
    for (int i = 0; i < g.edge_count(); ++i)
        if (is_loop(g, i)) return Poly{};
    ComponentPartition comp = components(g);
    Poly out = Poly::constant(1);
    for (int c = 0; c < comp.count; ++c)
        out *= detail::chromatic_component(component_subgraph(g, comp, c));
    return out;
}

namespace detail {

inline std::vector<Poly> convolve(const std::vector<Poly>& a, const std::vector<Poly>& b) {
    std::vector<Poly> out(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            if (!a[i].is_zero() && !b[j].is_zero()) out[i + j] += a[i] * b[j];
    return out;
}

/// Bivariate recursion on B(G; x, t) = sum_k phi_k t^k, stored as a vector of
/// x-polynomials indexed by the power of t:
///   edgeless on n vertices -> x^n
///   loop e                 -> t * B(G\e)
///   any other edge e       -> B(G\e) + (t - 1) * B(G/e)
/// and B is multiplicative over components. The bridge shortcut is a special
/// case because B(G\e) = x * B(G/e) when e is a bridge.
inline std::vector<Poly> dc_vector(const Graph& g, MemoCache* cache) {
    int m = g.edge_count();
    if (m == 0) return {Poly::monomial(g.vertex_count())};
    std::optional<std::string> key;
    if (cache) {
        key = canonical_key(g);
        if (key)
            if (const auto* hit = cache->find(*key)) return *hit;
    }
    std::vector<Poly> result;
    ComponentPartition comp = components(g);
    if (comp.count > 1) {
        result = {Poly::constant(1)};
        for (int c = 0; c < comp.count; ++c)
            result = convolve(result, dc_vector(component_subgraph(g, comp, c), cache));
    } else {
        int loop_id = -1;
        for (int i = 0; i < m && loop_id < 0; ++i)
            if (is_loop(g, i)) loop_id = i;
        if (loop_id >= 0) {
            std::vector<Poly> rest = dc_vector(delete_edge(g, loop_id).graph, cache);
            result.assign(rest.size() + 1, Poly{});
            for (size_t k = 0; k < rest.size(); ++k) result[k + 1] = std::move(rest[k]);
        } else {
            std::vector<Poly> del = dc_vector(delete_edge(g, 0).graph, cache);
            std::vector<Poly> con = dc_vector(contract_edge(g, 0).graph, cache);
            result.assign(m + 1, Poly{});
            for (int k = 0; k <= m; ++k) {
                Poly p;
                if (k < (int)del.size()) p += del[k];
                if (k >= 1) p += con[k - 1];
                if (k < (int)con.size()) p -= con[k];
                result[k] = std::move(p);
            }
        }
    }
    if (key) cache->insert(*key, result);
    return result;
}

} // namespace detail

/// All defect polynomials at once, index k = 0..m, by deletion-contraction
/// on the bivariate generating polynomial. Optional isomorphism memoization.
inline std::vector<Poly> defect_vector_dc(const Graph& g, MemoCache* cache = nullptr) {
    if (g.vertex_count() > 14)
        throw GuardError("defect_vector_dc: n <= 14", "too many vertices for recursion engine");
    if (g.edge_count() > 25)
        throw GuardError("defect_vector_dc: m <= 25", "too many edges for recursion engine");
    return detail::dc_vector(g, cache);
}

/// Independent engine: phi_k = sum over edge subsets A of
/// (-1)^(|A|-k) C(|A|,k) x^(c(A)), c(A) = components of (V,A). One pass over
/// all 2^m subsets collecting signed binomials per (k, component count).
inline std::vector<Poly> defect_vector_subset(const Graph& g) {
    int n = g.vertex_count(), m = g.edge_count();
    if (m > 22) throw GuardError("defect_vector_subset: m <= 22", "too many edges for subset expansion");
    std::array<std::array<long long, 23>, 23> binom{};
    for (int i = 0; i <= 22; ++i) {
        binom[i][0] = 1;
        for (int j = 1; j <= i; ++j)
            binom[i][j] = binom[i - 1][j - 1] + (j <= i - 1 ? binom[i - 1][j] : 0);
    }
    std::vector<std::vector<Int>> acc(m + 1, std::vector<Int>(n + 1, Int{}));
    detail::UnionFind uf(n);
    for (uint32_t mask = 0;; ++mask) {
        std::iota(uf.parent.begin(), uf.parent.end(), 0);
        int c = n, a = 0;
        for (int i = 0; i < m; ++i)
            if (mask >> i & 1) {
                ++a;
                Edge e = g.edge(i);
                if (uf.unite(e.u, e.v)) --c;
            }
        for (int k = 0; k <= a; ++k) {
            long long term = (a - k) % 2 ? -binom[a][k] : binom[a][k];
            acc[k][c] += Int(term);
        }
        if (mask == (uint32_t(1) << m) - 1) break;
    }
    std::vector<Poly> out(m + 1);
    for (int k = 0; k <= m; ++k) out[k] = Poly::from_coeffs(acc[k]);
    return out;
}

/// Flats engine for one k: sum of chromatic polynomials of G/X over the
/// closed sets X of size k; the zero polynomial when no flat of size k exists.
inline Poly defect_poly_flats(const Graph& g, int k) {
    if (k < 0 || k > g.edge_count()) throw Error("k out of range");
    Poly out;
    for (const Flat& f : flats_of_size(g, k)) out += chromatic_poly(contract_set(g, f.edges));
    return out;
}

/// Exhaustive oracle: bucket every coloring from a palette of `colors` by its
/// bad-edge count (loops always bad, parallel edges counted with
/// multiplicity). Index k = 0..m.
inline std::vector<long long> brute_force_vector(const Graph& g, int colors) {
    if (colors < 1) throw Error("colors must be at least 1");
    int n = g.vertex_count(), m = g.edge_count();
    if (detail::ipow_capped(colors, n, 10000000) > 10000000)
        throw GuardError("brute_force_vector: colors^n <= 10^7", "too many colorings to enumerate");
    std::vector<long long> counts(m + 1, 0);
    std::vector<int> col(n, 0);
    while (true) {
        int bad = 0;
        for (const Edge& e : g.edges())
            if (col[e.u] == col[e.v]) ++bad;
        ++counts[bad];
        int i = 0;
        while (i < n && ++col[i] == colors) col[i++] = 0;
        if (i == n) break;
    }
    return counts;
}

/// Least palette size whose defect polynomial value is positive, with the
/// closed-set route (min chromatic number of G/X over size-k flats) as a
/// built-in cross-check whenever the flat scan fits its guard.
inline int defect_number(const Graph& g, int k, MemoCache* cache = nullptr) {
    if (k < 0) throw Error("k must be non-negative");
    int n = g.vertex_count(), m = g.edge_count();
    if (k > m) return 0;
    MemoCache local;
    std::vector<Poly> vec = defect_vector_dc(g, cache ? cache : &local);
    int bound = std::max(n, 1);
    int primary = smallest_positive_support(vec[k], bound);
    if (detail::binomial_ll(m, k) <= 1000000) {
        int alt = 0;
        for (const Flat& f : flats_of_size(g, k)) {
            int chi = smallest_positive_support(chromatic_poly(contract_set(g, f.edges)), bound);
            if (alt == 0 || chi < alt) alt = chi;
        }
        if (alt != primary)
            throw EngineMismatch(format_edge_list(g), k,
                                 "recursion support", std::to_string(primary),
                                 "flat contraction minimum", std::to_string(alt));
    }
    return primary;
}

/// A coloring of the vertices with colors 1..colors_used.
struct Coloring {
    std::vector<int> color;
    int colors_used = 0;
};

inline int bad_edge_count(const Graph& g, const std::vector<int>& color) {
    int bad = 0;
    for (const Edge& e : g.edges())
        if (color[e.u] == color[e.v]) ++bad;
    return bad;
}

inline std::vector<int> bad_edge_ids(const Graph& g, const std::vector<int>& color) {
    std::vector<int> out;
    for (int i = 0; i < g.edge_count(); ++i) {
        Edge e = g.edge(i);
        if (color[e.u] == color[e.v]) out.push_back(i);
    }
    return out;
}

/// Concrete certificate for phi_k(G) = t: a coloring with exactly k bad edges
/// drawn from a palette of t colors. Any such coloring uses all t colors
/// (fewer would contradict minimality), so no surjectivity filter is needed.
inline std::optional<Coloring> witness_coloring(const Graph& g, int k, MemoCache* cache = nullptr) {
    int t = defect_number(g, k, cache);
    if (t == 0) return std::nullopt;
    int n = g.vertex_count();
    if (n == 0) return Coloring{{}, 0};
    if (detail::ipow_capped(t, n, 10000000) > 10000000)
        throw GuardError("witness_coloring: t^n <= 10^7", "too many colorings to search");
    std::vector<int> col(n, 1);
    // color swaps preserve bad counts, so vertex 0 can be pinned to color 1
    while (true) {
        if (bad_edge_count(g, col) == k) return Coloring{col, t};
        int i = 1;
        while (i < n && ++col[i] > t) col[i++] = 1;
        if (i == n) break;
    }
    throw Error("witness search exhausted unexpectedly");
}

/// Minimum bad-edge count over all colorings from a palette of t colors.
inline int min_bad_edges(const Graph& g, int t) {
    if (t < 1) throw Error("colors must be at least 1");
    int n = g.vertex_count();
    if (detail::ipow_capped(t, n, 10000000) > 10000000)
        throw GuardError("min_bad_edges: t^n <= 10^7", "too many colorings to enumerate");
    if (n == 0) return 0;
    int best = g.edge_count();
    std::vector<int> col(n, 1);
    while (best > 0) {
        best = std::min(best, bad_edge_count(g, col));
        int i = 1;
        while (i < n && ++col[i] > t) col[i++] = 1;
        if (i == n) break;
    }
    return best;
}

struct DefectRow {
    Poly poly;
    int number = 0;
    bool feasible = false;
    friend bool operator==(const DefectRow&, const DefectRow&) = default;
};

/// The full indexed family (phi_k(G;x), phi_k(G)) for k = 0..m, plus the
/// names of the engines that produced and cross-checked it.
struct DefectTable {
    int n = 0, m = 0;
    std::vector<DefectRow> rows;
    std::vector<std::string> engines;
    friend bool operator==(const DefectTable&, const DefectTable&) = default;
};

struct TableOptions {
    bool cross_check = true;  // run every engine that fits its guard and compare
    bool use_cache = true;
};

inline DefectTable defect_table(const Graph& g, const TableOptions& opt = {}) {
    int n = g.vertex_count(), m = g.edge_count();
    MemoCache cache;
    std::vector<Poly> dc = defect_vector_dc(g, opt.use_cache ? &cache : nullptr);
    DefectTable table;
    table.n = n;
    table.m = m;
    table.engines = {"dc"};
    auto mismatch = [&](int k, const char* engine, const std::string& got) {
        throw EngineMismatch(format_edge_list(g), k, "dc", dc[k].latex(), engine, got);
    };
    if (opt.cross_check) {
        if (m <= 22) {
            std::vector<Poly> sub = defect_vector_subset(g);
            for (int k = 0; k <= m; ++k)
                if (!(sub[k] == dc[k])) mismatch(k, "subset", sub[k].latex());
            table.engines.push_back("subset");
        }
        if (m <= 12) {
            for (int k = 0; k <= m; ++k) {
                Poly f = defect_poly_flats(g, k);
                if (!(f == dc[k])) mismatch(k, "flats", f.latex());
            }
            table.engines.push_back("flats");
        }
        if (detail::ipow_capped(3, n, 1000000) <= 1000000) {
            for (int colors = 1; colors <= 3; ++colors) {
                std::vector<long long> counts = brute_force_vector(g, colors);
                for (int k = 0; k <= m; ++k)
                    if (dc[k](Int(colors)) != Int(counts[k]))
                        mismatch(k, "oracle", "count " + std::to_string(counts[k]) +
                                                  " at " + std::to_string(colors) + " colors");
            }
            table.engines.push_back("oracle");
        }
    }
    int bound = std::max(n, 1);
    for (int k = 0; k <= m; ++k) {
        DefectRow row;
        row.poly = dc[k];
        row.number = smallest_positive_support(row.poly, bound);
        row.feasible = !row.poly.is_zero();
        table.rows.push_back(std::move(row));
    }
    return table;
}

} // namespace kdefect
