#include <catch2/catch_amalgamated.hpp>

#include "kdefect/engine.hpp"
#include "kdefect/families.hpp"

using namespace kdefect;

namespace {

Graph petersen() {
    std::vector<Edge> es;
    for (int i = 0; i < 5; ++i) es.push_back({i, (i + 1) % 5});
    for (int i = 0; i < 5; ++i) es.push_back({i, i + 5});
    for (int i = 0; i < 5; ++i) es.push_back({5 + i, 5 + (i + 2) % 5});
    return Graph(10, std::move(es));
}

} // namespace

TEST_CASE("chromatic polynomials") {
    Poly x = Poly::variable();
    CHECK(chromatic_poly(complete_graph(3)) == Poly::from_coeffs({0, 2, -3, 1}));
    CHECK(chromatic_poly(path_graph(3)) == Poly::from_coeffs({0, 1, -2, 1}));
    CHECK(chromatic_poly(complete_graph(4)) == Poly::falling_factorial(4));
    Poly xm1 = x - Poly::constant(Int(1));
    CHECK(chromatic_poly(cycle_graph(4)) == xm1 * xm1 * xm1 * xm1 + xm1);
    CHECK(chromatic_poly(Graph(3, std::vector<Edge>{})) == Poly::monomial(3));
    CHECK(chromatic_poly(Graph(1, {{0, 0}})).is_zero());
    CHECK(chromatic_poly(Graph(2, {{0, 1}, {0, 1}})) == chromatic_poly(complete_graph(2)));
    CHECK(chromatic_poly(Graph(0, std::vector<Edge>{})) == Poly::constant(Int(1)));

    Graph two_triangles(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
    CHECK(chromatic_poly(two_triangles) ==
          chromatic_poly(complete_graph(3)) * chromatic_poly(complete_graph(3)));

    CHECK(chromatic_poly(petersen())(Int(3)) == Int(120));
    CHECK_THROWS_AS(chromatic_poly(Graph(15, std::vector<Edge>{})), GuardError);
}

TEST_CASE("engine agreement on every labeled graph with four vertices") {
    MemoCache cache;
    for (const Graph& g : all_labeled_graphs(4)) {
        int m = g.edge_count();
        std::vector<Poly> dc = defect_vector_dc(g, &cache);
        std::vector<Poly> sub = defect_vector_subset(g);
        REQUIRE(dc.size() == size_t(m + 1));
        REQUIRE(sub.size() == size_t(m + 1));
        Poly total;
        for (int k = 0; k <= m; ++k) {
            CHECK(dc[k] == sub[k]);
            CHECK(dc[k] == defect_poly_flats(g, k));
            total += dc[k];
        }
        CHECK(total == Poly::monomial(4));
        for (int colors = 1; colors <= 3; ++colors) {
            std::vector<long long> counts = brute_force_vector(g, colors);
            for (int k = 0; k <= m; ++k) CHECK(dc[k](Int(colors)) == Int(counts[k]));
        }
    }
}

TEST_CASE("loops and parallel edges") {
    Graph loop(1, {{0, 0}});
    std::vector<Poly> lv = defect_vector_dc(loop);
    REQUIRE(lv.size() == 2);
    CHECK(lv[0].is_zero());
    CHECK(lv[1] == Poly::variable());
    CHECK(defect_vector_subset(loop) == lv);
    CHECK(brute_force_vector(loop, 3) == std::vector<long long>{0, 3});

    Graph dbl(2, {{0, 1}, {0, 1}});
    std::vector<Poly> dv = defect_vector_dc(dbl);
    REQUIRE(dv.size() == 3);
    CHECK(dv[0] == Poly::from_coeffs({0, -1, 1}));
    CHECK(dv[1].is_zero());
    CHECK(dv[2] == Poly::variable());
    CHECK(defect_vector_subset(dbl) == dv);

    Graph mixed(4, {{0, 1}, {0, 1}, {2, 2}});
    std::vector<Poly> mv = defect_vector_dc(mixed);
    std::vector<Poly> ms = defect_vector_subset(mixed);
    Poly total;
    for (size_t k = 0; k < mv.size(); ++k) {
        CHECK(mv[k] == ms[k]);
        CHECK(mv[k] == defect_poly_flats(mixed, (int)k));
        total += mv[k];
    }
    CHECK(total == Poly::monomial(4));
    for (int colors = 1; colors <= 3; ++colors) {
        std::vector<long long> counts = brute_force_vector(mixed, colors);
        for (size_t k = 0; k < mv.size(); ++k) CHECK(mv[k](Int(colors)) == Int(counts[k]));
    }
}

TEST_CASE("brute force bucket counts") {
    CHECK(brute_force_vector(complete_graph(3), 3) == std::vector<long long>{6, 18, 0, 3});
    CHECK(brute_force_vector(Graph(0, std::vector<Edge>{}), 2) == std::vector<long long>{1});
    CHECK(brute_force_vector(Graph(2, std::vector<Edge>{}), 1) == std::vector<long long>{1});
    CHECK_THROWS_AS(brute_force_vector(complete_graph(3), 0), Error);
    CHECK_THROWS_AS(brute_force_vector(Graph(13, std::vector<Edge>{}), 10), GuardError);
}

TEST_CASE("defect numbers") {
    MemoCache cache;
    for (int k = 0; k <= 5; ++k)
        CHECK(defect_number(cycle_graph(5), k, &cache) == std::vector<int>{3, 2, 3, 2, 0, 1}[k]);

    CHECK(defect_number(complete_graph(4), 0) == 4);
    CHECK(defect_number(complete_graph(4), 4) == 0);
    CHECK(defect_number(complete_graph(4), 5) == 0);
    CHECK(defect_number(complete_graph(4), 6) == 1);
    CHECK(defect_number(complete_graph(4), 7) == 0);
    CHECK_THROWS_AS(defect_number(complete_graph(4), -1), Error);

    CHECK(defect_number(Graph(0, std::vector<Edge>{}), 0) == 1);
    CHECK(defect_number(Graph(1, std::vector<Edge>{}), 0) == 1);
    CHECK(defect_number(Graph(1, {{0, 0}}), 1) == 1);
    CHECK(defect_number(Graph(1, {{0, 0}}), 0) == 0);

    CHECK(defect_number(complete_graph(6), 5) == 0);
    CHECK(defect_number(complete_graph(6), 7) == 2);
    CHECK(defect_number(complete_graph(6), 10) == 2);
    CHECK(defect_number(complete_graph(6), 14) == 0);
    CHECK(defect_number(complete_graph(6), 15) == 1);

    std::vector<Poly> k6 = defect_vector_dc(complete_graph(6), &cache);
    CHECK(k6[7](Int(2)) == Int(30));
}

TEST_CASE("witness colorings") {
    auto w = witness_coloring(cycle_graph(5), 1);
    REQUIRE(w.has_value());
    CHECK(w->colors_used == 2);
    CHECK(bad_edge_count(cycle_graph(5), w->color) == 1);
    CHECK(bad_edge_ids(cycle_graph(5), w->color).size() == 1);

    auto all_bad = witness_coloring(complete_graph(4), 6);
    REQUIRE(all_bad.has_value());
    CHECK(all_bad->colors_used == 1);
    CHECK(bad_edge_count(complete_graph(4), all_bad->color) == 6);

    CHECK_FALSE(witness_coloring(complete_graph(4), 5).has_value());

    auto chrom = witness_coloring(petersen(), 0);
    REQUIRE(chrom.has_value());
    CHECK(chrom->colors_used == 3);
    CHECK(bad_edge_count(petersen(), chrom->color) == 0);

    auto empty = witness_coloring(Graph(0, std::vector<Edge>{}), 0);
    REQUIRE(empty.has_value());
    CHECK(empty->color.empty());
}

TEST_CASE("fewest bad edges at a fixed color count") {
    CHECK(min_bad_edges(cycle_graph(4), 2) == 0);
    CHECK(min_bad_edges(cycle_graph(5), 2) == 1);
    CHECK(min_bad_edges(wheel_graph(5), 2) == 2);
    CHECK(min_bad_edges(complete_graph(4), 1) == 6);
    CHECK(min_bad_edges(complete_graph(4), 2) == 2);
    CHECK(min_bad_edges(complete_graph(4), 4) == 0);
    CHECK_THROWS_AS(min_bad_edges(cycle_graph(4), 0), Error);
}

TEST_CASE("memo cache reuse") {
    MemoCache cache;
    std::vector<Poly> first = defect_vector_dc(complete_graph(5), &cache);
    long long misses_after_first = cache.misses();
    CHECK(misses_after_first > 0);
    std::vector<Poly> second = defect_vector_dc(complete_graph(5), &cache);
    CHECK(second == first);
    CHECK(cache.misses() == misses_after_first);
    CHECK(cache.hits() > 0);
    CHECK(cache.size() > 0);
    cache.clear();
    CHECK(cache.size() == 0);

    std::vector<Poly> uncached = defect_vector_dc(complete_graph(5), nullptr);
    CHECK(uncached == first);
}

TEST_CASE("defect table") {
    DefectTable t = defect_table(cycle_graph(5));
    CHECK(t.n == 5);
    CHECK(t.m == 5);
    REQUIRE(t.rows.size() == 6);
    std::vector<int> numbers;
    for (const DefectRow& r : t.rows) numbers.push_back(r.number);
    CHECK(numbers == std::vector<int>{3, 2, 3, 2, 0, 1});
    CHECK(t.rows[0].poly == chromatic_poly(cycle_graph(5)));
    CHECK(t.rows[4].feasible == false);
    CHECK(t.rows[5].feasible == true);
    CHECK(t.engines == std::vector<std::string>{"dc", "subset", "flats", "oracle"});

    TableOptions off;
    off.cross_check = false;
    off.use_cache = false;
    DefectTable plain = defect_table(cycle_graph(5), off);
    CHECK(plain.rows == t.rows);
    CHECK(plain.engines == std::vector<std::string>{"dc"});

    DefectTable empty = defect_table(Graph(0, std::vector<Edge>{}));
    REQUIRE(empty.rows.size() == 1);
    CHECK(empty.rows[0].poly == Poly::constant(Int(1)));
    CHECK(empty.rows[0].number == 1);
    CHECK(empty.rows[0].feasible);
}

TEST_CASE("engine guards") {
    CHECK_THROWS_AS(defect_vector_dc(Graph(15, std::vector<Edge>{})), GuardError);
    std::vector<Edge> many(26, Edge{0, 1});
    CHECK_THROWS_AS(defect_vector_dc(Graph(2, many)), GuardError);
    std::vector<Edge> firm(23, Edge{0, 1});
    CHECK_THROWS_AS(defect_vector_subset(Graph(2, firm)), GuardError);
    CHECK_THROWS_AS(defect_poly_flats(cycle_graph(3), 4), Error);
}
