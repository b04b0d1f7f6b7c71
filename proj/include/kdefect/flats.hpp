#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "kdefect/graph.hpp"

namespace kdefect {

/// A closed edge set (flat of the cycle matroid) with the vertex partition
/// it spans: every edge of the host graph whose endpoints fall in one part
/// already belongs to the set.
struct Flat {
    std::vector<int> edges;
    ComponentPartition partition;
};

/// Closure test: X is closed iff no edge outside X has both endpoints in one
/// component of (V,X). Loops are self-connecting, so a closed set contains
/// every loop; the same goes for the remaining copies of a parallel edge.
inline bool is_closed(const Graph& g, const std::vector<int>& edge_set) {
    detail::UnionFind uf(g.vertex_count());
    std::vector<char> in(g.edge_count(), 0);
    for (int id : edge_set) {
        Edge e = g.edge(id);
        in[id] = 1;
        uf.unite(e.u, e.v);
    }
    for (int id = 0; id < g.edge_count(); ++id) {
        if (in[id]) continue;
        Edge e = g.edge(id);
        if (uf.find(e.u) == uf.find(e.v)) return false;
    }
    return true;
}

namespace detail {

inline ComponentPartition span_partition(const Graph& g, const std::vector<int>& edge_set) {
    UnionFind uf(g.vertex_count());
    for (int id : edge_set) {
        Edge e = g.edge(id);
        uf.unite(e.u, e.v);
    }
    ComponentPartition out;
    out.component.assign(g.vertex_count(), -1);
    for (int v = 0; v < g.vertex_count(); ++v) {
        int r = uf.find(v);
        if (out.component[r] < 0) out.component[r] = out.count++;
        out.component[v] = out.component[r];
    }
    return out;
}

inline long long binomial_ll(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

} // namespace detail

/// All closed sets of exactly k edges, in lexicographic edge-id order.
/// Subset scan, so C(m,k) is guarded.
inline std::vector<Flat> flats_of_size(const Graph& g, int k) {
    int m = g.edge_count();
    if (k < 0 || k > m) throw Error("flat size out of range");
    if (detail::binomial_ll(m, k) > 1000000)
        throw GuardError("flats_of_size: C(m,k) <= 10^6", "too many edge subsets to scan");
    std::vector<Flat> out;
    std::vector<int> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
        if (is_closed(g, pick)) out.push_back({pick, detail::span_partition(g, pick)});
        if (k == 0) break;
        int i = k - 1;
        while (i >= 0 && pick[i] == m - k + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    return out;
}

/// Contracts each component of (V, X) to one vertex. Edges inside a part are
/// dropped (for closed X there are none outside X itself); edges between
/// parts are kept with multiplicity. Part numbering follows first appearance
/// in vertex order.
inline Graph contract_set(const Graph& g, const std::vector<int>& edge_set) {
    ComponentPartition part = detail::span_partition(g, edge_set);
    std::vector<char> in(g.edge_count(), 0);
    for (int id : edge_set) {
        g.edge(id);
        in[id] = 1;
    }
    std::vector<Edge> es;
    for (int id = 0; id < g.edge_count(); ++id) {
        if (in[id]) continue;
        Edge e = g.edge(id);
        int bu = part.component[e.u], bv = part.component[e.v];
        if (bu != bv) es.push_back({bu, bv});
    }
    return Graph(part.count, std::move(es));
}

/// Sizes k for which a closed set of k edges exists. Flats correspond one to
/// one with partitions of V whose blocks induce connected subgraphs (the flat
/// is the set of edges inside blocks), so this walks set partitions instead
/// of edge subsets: Bell(n) candidates instead of 2^m.
inline std::set<int> feasible_k(const Graph& g) {
    int n = g.vertex_count();
    if (n > 12) throw GuardError("feasible_k: n <= 12", "too many vertices for partition scan");
    std::set<int> sizes;
    if (n == 0) {
        sizes.insert(0);
        return sizes;
    }
    std::vector<std::vector<int>> adj(n);
    for (const Edge& e : g.edges())
        if (e.u != e.v) {
            adj[e.u].push_back(e.v);
            adj[e.v].push_back(e.u);
        }
    std::vector<int> block(n, 0);
    auto block_connected = [&](int b) {
        std::vector<int> members;
        for (int v = 0; v < n; ++v)
            if (block[v] == b) members.push_back(v);
        std::vector<char> seen(n, 0);
        std::vector<int> stack{members[0]};
        seen[members[0]] = 1;
        int reached = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[v])
                if (block[w] == b && !seen[w]) {
                    seen[w] = 1;
                    ++reached;
                    stack.push_back(w);
                }
        }
        return reached == (int)members.size();
    };
    // restricted growth strings enumerate each set partition once
    auto rec = [&](auto&& self, int v, int used) -> void {
        if (v == n) {
            for (int b = 0; b < used; ++b)
                if (!block_connected(b)) return;
            int inside = 0;
            for (const Edge& e : g.edges())
                if (block[e.u] == block[e.v]) ++inside;
            sizes.insert(inside);
            return;
        }
        for (int b = 0; b <= used && b < n; ++b) {
            block[v] = b;
            self(self, v + 1, std::max(used, b + 1));
        }
    };
    rec(rec, 0, 0);
    return sizes;
}

} // namespace kdefect
