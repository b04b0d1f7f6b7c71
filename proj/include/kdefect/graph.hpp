#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "kdefect/errors.hpp"

namespace kdefect {

struct Edge {
    int u = 0, v = 0;
    friend bool operator==(Edge, Edge) = default;
};

/// Finite multigraph on vertices 0..n-1. Loops and parallel edges are kept
/// (contraction manufactures both), edge ids are dense and stable, and the
/// value is immutable: deletion and contraction build new graphs.
class Graph {
public:
    Graph() = default;

    Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
        if (n_ < 0) throw Error("negative vertex count");
        for (const Edge& e : edges_)
            if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_)
                throw Error("edge endpoint out of range");
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return (int)edges_.size(); }

    const std::vector<Edge>& edges() const { return edges_; }

    Edge edge(int id) const {
        if (id < 0 || id >= edge_count()) throw Error("edge id out of range");
        return edges_[id];
    }

    bool operator==(const Graph& o) const {
        return n_ == o.n_ && sorted_pairs() == o.sorted_pairs();
    }

private:
    std::vector<std::pair<int, int>> sorted_pairs() const {
        std::vector<std::pair<int, int>> ps;
        ps.reserve(edges_.size());
        for (const Edge& e : edges_) ps.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
        std::sort(ps.begin(), ps.end());
        return ps;
    }

    int n_ = 0;
    std::vector<Edge> edges_;
};

/// Vertex -> component index; components are numbered by first appearance
/// in vertex order, so the labeling is deterministic.
struct ComponentPartition {
    std::vector<int> component;
    int count = 0;
};

namespace detail {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a), b = find(b);
        if (a == b) return false;
        parent[std::max(a, b)] = std::min(a, b);
        return true;
    }
};

} // namespace detail

inline ComponentPartition components(const Graph& g) {
    int n = g.vertex_count();
    detail::UnionFind uf(n);
    for (const Edge& e : g.edges()) uf.unite(e.u, e.v);
    ComponentPartition out;
    out.component.assign(n, -1);
    for (int v = 0; v < n; ++v) {
        int r = uf.find(v);
        if (out.component[r] < 0) out.component[r] = out.count++;
        out.component[v] = out.component[r];
    }
    return out;
}

/// Result of an edit: the new graph plus old edge id -> new edge id
/// (-1 for the edge the edit removed).
struct GraphEdit {
    Graph graph;
    std::vector<int> edge_map;
};

inline GraphEdit delete_edge(const Graph& g, int id) {
    g.edge(id);
    std::vector<Edge> es;
    es.reserve(g.edge_count() - 1);
    std::vector<int> map(g.edge_count(), -1);
    for (int i = 0; i < g.edge_count(); ++i) {
        if (i == id) continue;
        map[i] = (int)es.size();
        es.push_back(g.edge(i));
    }
    return {Graph(g.vertex_count(), std::move(es)), std::move(map)};
}

/// Identifies the endpoints of edge `id` (keeping the smaller label, shifting
/// later vertices down) and drops that edge. Other edges survive even when
/// they turn into loops or parallels. Contracting a loop is deletion.
inline GraphEdit contract_edge(const Graph& g, int id) {
    Edge e = g.edge(id);
    if (e.u == e.v) return delete_edge(g, id);
    int keep = std::min(e.u, e.v), gone = std::max(e.u, e.v);
    auto relabel = [&](int w) { return w == gone ? keep : w > gone ? w - 1 : w; };
    std::vector<Edge> es;
    es.reserve(g.edge_count() - 1);
    std::vector<int> map(g.edge_count(), -1);
    for (int i = 0; i < g.edge_count(); ++i) {
        if (i == id) continue;
        Edge f = g.edge(i);
        map[i] = (int)es.size();
        es.push_back({relabel(f.u), relabel(f.v)});
    }
    return {Graph(g.vertex_count() - 1, std::move(es)), std::move(map)};
}

inline bool is_loop(const Graph& g, int id) {
    Edge e = g.edge(id);
    return e.u == e.v;
}

inline bool is_bridge(const Graph& g, int id) {
    if (is_loop(g, id)) return false;
    return components(delete_edge(g, id).graph).count > components(g).count;
}

/// Graphic-matroid rank: vertices minus components.
inline int rank(const Graph& g) { return g.vertex_count() - components(g).count; }

inline int degree(const Graph& g, int v) {
    if (v < 0 || v >= g.vertex_count()) throw Error("vertex out of range");
    int d = 0;
    for (const Edge& e : g.edges()) {
        if (e.u == v) ++d;
        if (e.v == v) ++d;
    }
    return d;
}

/// Side assignment (0/1 per vertex) when the graph is bipartite, else
/// nothing. A loop rules bipartiteness out; parallel edges do not.
inline std::optional<std::vector<int>> bipartition(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::vector<int>> adj(n);
    for (const Edge& e : g.edges()) {
        if (e.u == e.v) return std::nullopt;
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::vector<int> side(n, -1), stack;
    for (int s = 0; s < n; ++s) {
        if (side[s] >= 0) continue;
        side[s] = 0;
        stack.assign(1, s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[v]) {
                if (side[w] < 0) {
                    side[w] = 1 - side[v];
                    stack.push_back(w);
                } else if (side[w] == side[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return side;
}

/// Largest clique in the underlying simple graph (loops and multiplicities
/// ignored). Branch and bound on bitmasks.
inline int clique_number(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return 0;
    if (n > 31) throw GuardError("clique_number: n <= 31", "too many vertices for clique search");
    std::vector<uint32_t> adj(n, 0);
    for (const Edge& e : g.edges()) {
        if (e.u == e.v) continue;
        adj[e.u] |= uint32_t(1) << e.v;
        adj[e.v] |= uint32_t(1) << e.u;
    }
    int best = 1;
    auto grow = [&](auto&& self, uint32_t cand, int size) -> void {
        best = std::max(best, size);
        while (cand) {
            if (size + __builtin_popcount(cand) <= best) return;
            int v = __builtin_ctz(cand);
            cand &= cand - 1;
            self(self, cand & adj[v], size + 1);
        }
    };
    grow(grow, (uint32_t(1) << n) - 1, 0);
    return best;
}

/// Least number of edges whose removal disconnects the graph; 0 when it is
/// already disconnected or has fewer than two vertices. Loops never count.
/// Exhaustive over deletion sets, guarded at 20 non-loop edges.
inline int edge_connectivity(const Graph& g) {
    int n = g.vertex_count();
    if (n < 2) return 0;
    if (components(g).count > 1) return 0;
    std::vector<Edge> nonloop;
    for (const Edge& e : g.edges())
        if (e.u != e.v) nonloop.push_back(e);
    int m = (int)nonloop.size();
    if (m > 20) throw GuardError("edge_connectivity: non-loop m <= 20", "too many edges for cut search");

    auto still_connected = [&](uint32_t removed) {
        detail::UnionFind uf(n);
        int parts = n;
        for (int i = 0; i < m; ++i)
            if (!(removed >> i & 1) && uf.unite(nonloop[i].u, nonloop[i].v)) --parts;
        return parts == 1;
    };

    for (int size = 1; size < m; ++size) {
        std::vector<int> pick(size);
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
            uint32_t removed = 0;
            for (int p : pick) removed |= uint32_t(1) << p;
            if (!still_connected(removed)) return size;
            int i = size - 1;
            while (i >= 0 && pick[i] == m - size + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return m;
}

/// Subgraph induced by one component, vertices renumbered by increasing
/// original label, edges kept in original id order.
inline Graph component_subgraph(const Graph& g, const ComponentPartition& comp, int which) {
    std::vector<int> local(g.vertex_count(), -1);
    int count = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (comp.component[v] == which) local[v] = count++;
    std::vector<Edge> es;
    for (const Edge& e : g.edges())
        if (comp.component[e.u] == which) es.push_back({local[e.u], local[e.v]});
    return Graph(count, std::move(es));
}

} // namespace kdefect
