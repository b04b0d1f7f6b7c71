#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "kdefect/engine.hpp"
#include "kdefect/flats.hpp"
#include "kdefect/graph.hpp"
#include "kdefect/poly.hpp"

namespace kdefect {

// insertion-ordered so every serialization is byte-stable
using ojson = nlohmann::ordered_json;

inline ojson poly_to_json(const Poly& p) {
    ojson a = ojson::array();
    for (const Int& c : p.coeffs()) a.push_back(c.to_int64());
    return a;
}

inline Poly poly_from_json(const ojson& a) {
    if (!a.is_array()) throw ParseError(0, "polynomial must be a JSON array");
    std::vector<Int> cs;
    for (const auto& c : a) {
        if (!c.is_number_integer()) throw ParseError(0, "polynomial coefficients must be integers");
        cs.push_back(Int(c.get<long long>()));
    }
    return Poly::from_coeffs(std::move(cs));
}

inline ojson graph_to_json(const Graph& g) {
    ojson edges = ojson::array();
    for (const Edge& e : g.edges()) edges.push_back(ojson::array({e.u, e.v}));
    return ojson{{"n", g.vertex_count()}, {"m", g.edge_count()}, {"edges", edges}};
}

inline ojson table_to_json(const DefectTable& t) {
    ojson rows = ojson::array();
    for (int k = 0; k < (int)t.rows.size(); ++k) {
        const DefectRow& r = t.rows[k];
        rows.push_back(ojson{{"k", k},
                             {"poly", poly_to_json(r.poly)},
                             {"number", r.number},
                             {"feasible", r.feasible}});
    }
    return ojson{{"n", t.n}, {"m", t.m}, {"rows", rows}, {"engines", t.engines}};
}

inline DefectTable table_from_json(const ojson& j) {
    DefectTable t;
    t.n = j.at("n").get<int>();
    t.m = j.at("m").get<int>();
    for (const auto& row : j.at("rows")) {
        DefectRow r;
        r.poly = poly_from_json(row.at("poly"));
        r.number = row.at("number").get<int>();
        r.feasible = row.at("feasible").get<bool>();
        t.rows.push_back(std::move(r));
    }
    if (j.contains("engines"))
        for (const auto& e : j.at("engines")) t.engines.push_back(e.get<std::string>());
    return t;
}

inline ojson witness_to_json(const Graph& g, int k, const Coloring& c) {
    return ojson{{"k", k},
                 {"colors", c.colors_used},
                 {"assignment", c.color},
                 {"bad_edges", bad_edge_ids(g, c.color)}};
}

inline ojson flat_to_json(const Flat& f) {
    ojson parts = ojson::array();
    for (int b = 0; b < f.partition.count; ++b) {
        ojson part = ojson::array();
        for (int v = 0; v < (int)f.partition.component.size(); ++v)
            if (f.partition.component[v] == b) part.push_back(v);
        parts.push_back(part);
    }
    return ojson{{"edges", f.edges}, {"parts", parts}};
}

} // namespace kdefect
