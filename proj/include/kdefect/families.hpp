#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "kdefect/flats.hpp"
#include "kdefect/graph.hpp"
#include "kdefect/poly.hpp"

namespace kdefect {

enum class FamilyKind {
    path,
    star,
    cycle,
    wheel,
    complete,
    complete_bipartite,
    random_tree,
    all_labeled_graphs,
    all_labeled_trees,
};

/// One family instance, e.g. wheel:6 or kbipartite:3,4. `text` keeps the
/// CLI spelling for labeling reports.
struct FamilySpec {
    FamilyKind kind = FamilyKind::path;
    int a = 0, b = 0;
    unsigned seed = 0;
    std::string text;
};

inline Graph path_graph(int n) {
    if (n < 1) throw Error("path needs n >= 1");
    std::vector<Edge> es;
    for (int i = 0; i + 1 < n; ++i) es.push_back({i, i + 1});
    return Graph(n, std::move(es));
}

inline Graph star_graph(int n) {
    if (n < 1) throw Error("star needs n >= 1");
    std::vector<Edge> es;
    for (int i = 1; i < n; ++i) es.push_back({0, i});
    return Graph(n, std::move(es));
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw Error("cycle needs n >= 3");
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i) es.push_back({i, (i + 1) % n});
    return Graph(n, std::move(es));
}

/// Hub 0 joined to every vertex of the rim cycle 1..n-1: n vertices total and
/// m = 2n-2 edges. (Much of the literature writes W_n for n+1 vertices; here
/// the subscript counts all vertices, hub included.)
inline Graph wheel_graph(int n) {
    if (n < 4) throw Error("wheel needs n >= 4");
    std::vector<Edge> es;
    for (int i = 1; i + 1 < n; ++i) es.push_back({i, i + 1});
    es.push_back({n - 1, 1});
    for (int i = 1; i < n; ++i) es.push_back({0, i});
    return Graph(n, std::move(es));
}

inline Graph complete_graph(int n) {
    if (n < 1) throw Error("complete graph needs n >= 1");
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.push_back({i, j});
    return Graph(n, std::move(es));
}

inline Graph complete_bipartite_graph(int a, int b) {
    if (a < 1 || b < 1) throw Error("complete bipartite graph needs both sides nonempty");
    std::vector<Edge> es;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) es.push_back({i, a + j});
    return Graph(a + b, std::move(es));
}

namespace detail {

inline Graph tree_from_pruefer(const std::vector<int>& seq, int n) {
    std::vector<int> deg(n, 1);
    for (int x : seq) ++deg[x];
    std::vector<Edge> es;
    std::vector<char> used(n, 0);
    for (int x : seq) {
        int leaf = -1;
        for (int v = 0; v < n && leaf < 0; ++v)
            if (deg[v] == 1 && !used[v]) leaf = v;
        es.push_back({leaf, x});
        used[leaf] = 1;
        --deg[x];
    }
    int u = -1, v = -1;
    for (int w = 0; w < n; ++w)
        if (deg[w] == 1 && !used[w]) (u < 0 ? u : v) = w;
    es.push_back({u, v});
    return Graph(n, std::move(es));
}

} // namespace detail

inline Graph random_tree(int n, unsigned seed) {
    if (n < 1) throw Error("tree needs n >= 1");
    if (n == 1) return Graph(1, std::vector<Edge>{});
    if (n == 2) return Graph(2, std::vector<Edge>{{0, 1}});
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<int> seq(n - 2);
    for (int& x : seq) x = pick(rng);
    return detail::tree_from_pruefer(seq, n);
}

/// Every simple graph on labeled vertices 0..n-1, one per subset of the
/// lexicographically ordered vertex pairs, in subset-mask order.
inline std::vector<Graph> all_labeled_graphs(int n) {
    if (n < 0 || n > 6) throw GuardError("all_labeled_graphs: n <= 6", "labeled graph corpus too large");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    int p = (int)pairs.size();
    std::vector<Graph> out;
    out.reserve(size_t(1) << p);
    for (uint32_t mask = 0; mask < (uint32_t(1) << p); ++mask) {
        std::vector<Edge> es;
        for (int i = 0; i < p; ++i)
            if (mask >> i & 1) es.push_back({pairs[i].first, pairs[i].second});
        out.push_back(Graph(n, std::move(es)));
    }
    return out;
}

/// Every labeled tree on n vertices via its Pruefer sequence (n^(n-2) trees).
inline std::vector<Graph> all_labeled_trees(int n) {
    if (n < 1 || n > 8) throw GuardError("all_labeled_trees: n <= 8", "labeled tree corpus too large");
    std::vector<Graph> out;
    if (n == 1) {
        out.push_back(Graph(1, std::vector<Edge>{}));
        return out;
    }
    if (n == 2) {
        out.push_back(Graph(2, std::vector<Edge>{{0, 1}}));
        return out;
    }
    std::vector<int> seq(n - 2, 0);
    while (true) {
        out.push_back(detail::tree_from_pruefer(seq, n));
        int i = 0;
        while (i < n - 2 && ++seq[i] == n) seq[i++] = 0;
        if (i == n - 2) break;
    }
    return out;
}

inline long long binomial(int n, int k) { return detail::binomial_ll(n, k); }

/// phi_k of any tree on n vertices: C(n-1,k) x(x-1)^(n-1-k).
inline Poly tree_defect_poly(int n, int k) {
    if (n < 1 || k < 0 || k > n - 1) throw Error("tree_defect_poly range");
    Poly p = Poly::variable();
    for (int i = 0; i < n - 1 - k; ++i) p *= Poly::from_coeffs({-1, 1});
    return p.scaled(Int(binomial(n - 1, k)));
}

/// phi_k of the n-cycle: C(n,k) [ (x-1)^(n-k) + (-1)^(n-k) (x-1) ].
inline Poly cycle_defect_poly(int n, int k) {
    if (n < 3 || k < 0 || k > n) throw Error("cycle_defect_poly range");
    Poly xm1 = Poly::from_coeffs({-1, 1});
    Poly p = Poly::constant(1);
    for (int i = 0; i < n - k; ++i) p *= xm1;
    p += xm1.scaled(Int((n - k) % 2 ? -1 : 1));
    return p.scaled(Int(binomial(n, k)));
}

/// Tree defect numbers, total: 2 for 0 <= k <= n-2, 1 at k = n-1, 0 beyond.
inline int tree_defect_number(int n, int k) {
    if (n < 1 || k < 0) throw Error("tree_defect_number range");
    if (n == 1) return k == 0 ? 1 : 0;
    if (k <= n - 2) return 2;
    if (k == n - 1) return 1;
    return 0;
}

/// Cycle defect numbers, total: parity rule 2/3 for 0 <= k <= n-2 (2 when
/// n-k is even), 0 at k = n-1, 1 at k = n, 0 beyond.
inline int cycle_defect_number(int n, int k) {
    if (n < 3 || k < 0) throw Error("cycle_defect_number range");
    if (k <= n - 2) return (n - k) % 2 == 0 ? 2 : 3;
    if (k == n - 1) return 0;
    if (k == n) return 1;
    return 0;
}

/// Wheel defect numbers, total over k (wheel on n >= 4 vertices, m = 2n-2):
/// 3 or 4 at k = 0 by parity of n, 3 before floor(n/2), 2 through 2n-5,
/// 0 at the two infeasible sizes 2n-4 and 2n-3, 1 at k = m.
inline int wheel_defect_number(int n, int k) {
    if (n < 4) throw Error("wheel needs n >= 4");
    if (k < 0) throw Error("wheel_defect_number range");
    if (k == 0) return n % 2 ? 3 : 4;
    if (k < n / 2) return 3;
    if (k <= 2 * n - 5) return 2;
    if (k <= 2 * n - 3) return 0;
    if (k == 2 * n - 2) return 1;
    return 0;
}

/// Fewest bad edges any 2-coloring of the wheel on n vertices can have.
inline int wheel_min_bad_2col(int n) {
    if (n < 4) throw Error("wheel needs n >= 4");
    return n / 2;
}

/// Infeasible defect sizes of K_n as printed: the union over p >= 1 with
/// (2p+1)^2 <= 8n-15 of the open intervals
/// ( C(n-p,2) + C(p,2), C(n-p+1,2) ).
inline std::set<int> kn_infeasible_set(int n) {
    if (n < 3) throw Error("kn_infeasible_set needs n >= 3");
    std::set<int> out;
    for (int p = 1; (2 * p + 1) * (2 * p + 1) <= 8 * n - 15; ++p) {
        long long lo = binomial(n - p, 2) + binomial(p, 2);
        long long hi = binomial(n - p + 1, 2);
        for (long long k = lo + 1; k < hi; ++k) out.insert((int)k);
    }
    return out;
}

/// Every achievable value of sum of deg(v) over an independent vertex set
/// (the empty set contributes 0). A looped vertex is never independent.
inline std::set<int> independent_degree_sums(const Graph& g) {
    int n = g.vertex_count();
    if (n > 20) throw GuardError("independent_degree_sums: n <= 20", "too many vertices");
    std::vector<uint32_t> adj(n, 0);
    std::vector<char> looped(n, 0);
    for (const Edge& e : g.edges()) {
        if (e.u == e.v) {
            looped[e.u] = 1;
            continue;
        }
        adj[e.u] |= uint32_t(1) << e.v;
        adj[e.v] |= uint32_t(1) << e.u;
    }
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = degree(g, v);
    std::set<int> sums;
    auto rec = [&](auto&& self, int v, uint32_t taken, int sum) -> void {
        if (v == n) {
            sums.insert(sum);
            return;
        }
        self(self, v + 1, taken, sum);
        if (!looped[v] && !(adj[v] & taken))
            self(self, v + 1, taken | uint32_t(1) << v, sum + deg[v]);
    };
    rec(rec, 0, 0, 0);
    return sums;
}

/// Bad-edge counts achievable by 2-colorings. Swapping the two colors fixes
/// the count, so vertex 0 is pinned to one side.
inline std::set<int> two_color_bad_spectrum(const Graph& g) {
    int n = g.vertex_count();
    if (n > 23) throw GuardError("two_color_bad_spectrum: 2^n <= 10^7", "too many vertices");
    std::set<int> out;
    if (n == 0) {
        out.insert(0);
        return out;
    }
    uint32_t half = uint32_t(1) << (n - 1);
    for (uint32_t mask = 0; mask < half; ++mask) {
        int bad = 0;
        for (const Edge& e : g.edges())
            if ((mask >> e.u & 1) == (mask >> e.v & 1)) ++bad;
        out.insert(bad);
    }
    return out;
}

/// Parses one CLI family spec, expanding a trailing range ("wheel:4..8") into
/// one spec per size. kbipartite takes "a,b"; randomtree takes "n" or
/// "n,seed".
inline std::vector<FamilySpec> parse_family_specs(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 >= text.size())
        throw ParseError(0, "family spec needs the form kind:params, got \"" + text + "\"");
    std::string kind_name = text.substr(0, colon);
    std::string params = text.substr(colon + 1);
    auto parse_int = [&](const std::string& s) {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError(0, "bad number \"" + s + "\" in family spec \"" + text + "\"");
        return std::stoi(s);
    };
    FamilyKind kind;
    if (kind_name == "path") kind = FamilyKind::path;
    else if (kind_name == "star") kind = FamilyKind::star;
    else if (kind_name == "cycle") kind = FamilyKind::cycle;
    else if (kind_name == "wheel") kind = FamilyKind::wheel;
    else if (kind_name == "complete") kind = FamilyKind::complete;
    else if (kind_name == "kbipartite") kind = FamilyKind::complete_bipartite;
    else if (kind_name == "randomtree") kind = FamilyKind::random_tree;
    else if (kind_name == "allgraphs") kind = FamilyKind::all_labeled_graphs;
    else if (kind_name == "alltrees") kind = FamilyKind::all_labeled_trees;
    else throw ParseError(0, "unknown family \"" + kind_name + "\"");

    std::vector<FamilySpec> out;
    if (kind == FamilyKind::complete_bipartite || kind == FamilyKind::random_tree) {
        auto comma = params.find(',');
        FamilySpec spec;
        spec.kind = kind;
        spec.text = text;
        if (kind == FamilyKind::complete_bipartite) {
            if (comma == std::string::npos)
                throw ParseError(0, "kbipartite needs two sizes, e.g. kbipartite:3,4");
            spec.a = parse_int(params.substr(0, comma));
            spec.b = parse_int(params.substr(comma + 1));
        } else {
            spec.a = parse_int(comma == std::string::npos ? params : params.substr(0, comma));
            if (comma != std::string::npos) spec.seed = (unsigned)parse_int(params.substr(comma + 1));
        }
        out.push_back(std::move(spec));
        return out;
    }
    auto dots = params.find("..");
    int lo, hi;
    if (dots == std::string::npos) {
        lo = hi = parse_int(params);
    } else {
        lo = parse_int(params.substr(0, dots));
        hi = parse_int(params.substr(dots + 2));
        if (lo > hi) throw ParseError(0, "empty range in family spec \"" + text + "\"");
    }
    for (int v = lo; v <= hi; ++v) {
        FamilySpec spec;
        spec.kind = kind;
        spec.a = v;
        spec.text = kind_name + ":" + std::to_string(v);
        out.push_back(std::move(spec));
    }
    return out;
}

/// Instantiates one spec; list kinds (allgraphs, alltrees) yield many graphs.
inline std::vector<Graph> generate(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilyKind::path: return {path_graph(spec.a)};
        case FamilyKind::star: return {star_graph(spec.a)};
        case FamilyKind::cycle: return {cycle_graph(spec.a)};
        case FamilyKind::wheel: return {wheel_graph(spec.a)};
        case FamilyKind::complete: return {complete_graph(spec.a)};
        case FamilyKind::complete_bipartite: return {complete_bipartite_graph(spec.a, spec.b)};
        case FamilyKind::random_tree: return {random_tree(spec.a, spec.seed)};
        case FamilyKind::all_labeled_graphs: return all_labeled_graphs(spec.a);
        case FamilyKind::all_labeled_trees: return all_labeled_trees(spec.a);
    }
    throw Error("unreachable family kind");
}

} // namespace kdefect
