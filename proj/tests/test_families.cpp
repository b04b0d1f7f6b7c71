#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "kdefect/engine.hpp"
#include "kdefect/families.hpp"

using namespace kdefect;

TEST_CASE("generator shapes") {
    CHECK(path_graph(1).vertex_count() == 1);
    CHECK(path_graph(4).edge_count() == 3);
    CHECK(star_graph(5).edge_count() == 4);
    for (int v = 1; v < 5; ++v) CHECK(degree(star_graph(5), v) == 1);
    CHECK(cycle_graph(3) == complete_graph(3));
    CHECK(cycle_graph(6).edge_count() == 6);

    Graph w = wheel_graph(6);
    CHECK(w.vertex_count() == 6);
    CHECK(w.edge_count() == 10);
    CHECK(degree(w, 0) == 5);
    for (int v = 1; v < 6; ++v) CHECK(degree(w, v) == 3);
    CHECK(wheel_graph(4) == complete_graph(4));

    CHECK(complete_graph(5).edge_count() == 10);
    CHECK(complete_bipartite_graph(3, 4).edge_count() == 12);
    CHECK(complete_bipartite_graph(1, 1) == path_graph(2));
}

TEST_CASE("pruefer decoding") {
    CHECK(detail::tree_from_pruefer({}, 2) == path_graph(2));
    CHECK(detail::tree_from_pruefer({0, 0}, 4) == star_graph(4));
    CHECK(detail::tree_from_pruefer({1, 2}, 4) == path_graph(4));
}

TEST_CASE("random trees are reproducible trees") {
    Graph a = random_tree(8, 42), b = random_tree(8, 42);
    CHECK(a == b);
    CHECK(a.edge_count() == 7);
    CHECK(components(a).count == 1);
    CHECK(random_tree(1, 7).edge_count() == 0);
}

TEST_CASE("exhaustive corpora") {
    CHECK(all_labeled_graphs(0).size() == 1);
    CHECK(all_labeled_graphs(2).size() == 2);
    CHECK(all_labeled_graphs(3).size() == 8);
    CHECK(all_labeled_graphs(5).size() == 1024);
    CHECK_THROWS_AS(all_labeled_graphs(7), GuardError);

    CHECK(all_labeled_trees(1).size() == 1);
    CHECK(all_labeled_trees(2).size() == 1);
    CHECK(all_labeled_trees(3).size() == 3);
    CHECK(all_labeled_trees(4).size() == 16);
    CHECK(all_labeled_trees(6).size() == 1296);
    CHECK(all_labeled_trees(7).size() == 16807);
    CHECK_THROWS_AS(all_labeled_trees(9), GuardError);

    for (const Graph& t : all_labeled_trees(4)) {
        CHECK(t.edge_count() == 3);
        CHECK(components(t).count == 1);
    }
}

TEST_CASE("tree defect polynomial matches the engine and ignores tree shape") {
    for (int k = 0; k <= 3; ++k) {
        Poly want = tree_defect_poly(4, k);
        CHECK(defect_vector_dc(path_graph(4))[k] == want);
        CHECK(defect_vector_dc(star_graph(4))[k] == want);
    }
    Poly total;
    for (int k = 0; k <= 4; ++k) total += tree_defect_poly(5, k);
    CHECK(total == Poly::monomial(5));
}

TEST_CASE("cycle defect polynomial matches the engine") {
    for (int n = 3; n <= 6; ++n) {
        std::vector<Poly> vec = defect_vector_dc(cycle_graph(n));
        for (int k = 0; k <= n; ++k) CHECK(vec[k] == cycle_defect_poly(n, k));
    }
    CHECK(cycle_defect_poly(5, 5) == Poly::variable());
    CHECK(cycle_defect_poly(5, 4).is_zero());
}

TEST_CASE("closed-form defect numbers") {
    CHECK(tree_defect_number(1, 0) == 1);
    CHECK(tree_defect_number(1, 1) == 0);
    for (int n = 2; n <= 7; ++n) {
        for (int k = 0; k <= n - 2; ++k) CHECK(tree_defect_number(n, k) == 2);
        CHECK(tree_defect_number(n, n - 1) == 1);
        CHECK(tree_defect_number(n, n) == 0);
    }

    std::vector<int> c5{3, 2, 3, 2, 0, 1};
    for (int k = 0; k <= 5; ++k) CHECK(cycle_defect_number(5, k) == c5[k]);
    std::vector<int> c6{2, 3, 2, 3, 2, 0, 1};
    for (int k = 0; k <= 6; ++k) CHECK(cycle_defect_number(6, k) == c6[k]);

    std::vector<int> w5{3, 3, 2, 2, 2, 2, 0, 0, 1};
    for (int k = 0; k <= 8; ++k) CHECK(wheel_defect_number(5, k) == w5[k]);
    std::vector<int> w4{4, 3, 2, 2, 0, 0, 1};
    for (int k = 0; k <= 6; ++k) CHECK(wheel_defect_number(4, k) == w4[k]);
    CHECK_THROWS_AS(wheel_defect_number(3, 0), Error);

    std::vector<int> floors{2, 2, 3, 3, 4, 4};
    for (int n = 4; n <= 9; ++n) CHECK(wheel_min_bad_2col(n) == floors[n - 4]);
}

TEST_CASE("complete graph infeasible intervals") {
    CHECK(kn_infeasible_set(3) == std::set<int>{2});
    CHECK(kn_infeasible_set(4) == std::set<int>{4, 5});
    CHECK(kn_infeasible_set(5) == std::set<int>{5, 7, 8, 9});
    CHECK(kn_infeasible_set(6) == std::set<int>{8, 9, 11, 12, 13, 14});
    CHECK(kn_infeasible_set(7) == std::set<int>{12, 13, 14, 16, 17, 18, 19, 20});
}

TEST_CASE("independent degree sums") {
    CHECK(independent_degree_sums(complete_bipartite_graph(3, 4)) ==
          std::set<int>{0, 3, 4, 6, 8, 9, 12});
    CHECK(independent_degree_sums(path_graph(3)) == std::set<int>{0, 1, 2});
    CHECK(independent_degree_sums(Graph(2, {{0, 0}, {0, 1}})) == std::set<int>{0, 1});
    CHECK(independent_degree_sums(Graph(0, std::vector<Edge>{})) == std::set<int>{0});
    CHECK_THROWS_AS(independent_degree_sums(Graph(21, std::vector<Edge>{})), GuardError);
}

TEST_CASE("two-color bad-edge spectrum") {
    Graph k34 = complete_bipartite_graph(3, 4);
    std::set<int> spectrum = two_color_bad_spectrum(k34);

    std::set<int> via_oracle;
    std::vector<long long> counts = brute_force_vector(k34, 2);
    for (int k = 0; k < (int)counts.size(); ++k)
        if (counts[k] > 0) via_oracle.insert(k);
    CHECK(spectrum == via_oracle);
    CHECK(spectrum == std::set<int>{0, 3, 4, 5, 6, 7, 8, 9, 12});

    CHECK(two_color_bad_spectrum(path_graph(3)) == std::set<int>{0, 1, 2});
    CHECK(two_color_bad_spectrum(Graph(1, {{0, 0}})) == std::set<int>{1});
    CHECK_THROWS_AS(two_color_bad_spectrum(Graph(24, std::vector<Edge>{})), GuardError);
}

TEST_CASE("family spec parsing") {
    auto one = parse_family_specs("wheel:6");
    REQUIRE(one.size() == 1);
    CHECK(one[0].kind == FamilyKind::wheel);
    CHECK(one[0].a == 6);
    CHECK(one[0].text == "wheel:6");

    auto range = parse_family_specs("cycle:3..5");
    REQUIRE(range.size() == 3);
    CHECK(range[0].text == "cycle:3");
    CHECK(range[2].text == "cycle:5");
    CHECK(range[2].a == 5);

    auto kb = parse_family_specs("kbipartite:3,4");
    REQUIRE(kb.size() == 1);
    CHECK(kb[0].a == 3);
    CHECK(kb[0].b == 4);

    auto rt = parse_family_specs("randomtree:6,42");
    REQUIRE(rt.size() == 1);
    CHECK(rt[0].a == 6);
    CHECK(rt[0].seed == 42);

    CHECK_THROWS_AS(parse_family_specs("frob:3"), ParseError);
    CHECK_THROWS_AS(parse_family_specs("cycle:"), ParseError);
    CHECK_THROWS_AS(parse_family_specs("cycle:5..3"), ParseError);
    CHECK_THROWS_AS(parse_family_specs("cycle:x"), ParseError);
    CHECK_THROWS_AS(parse_family_specs("kbipartite:3"), ParseError);
    CHECK_THROWS_AS(parse_family_specs(""), ParseError);

    CHECK(generate(parse_family_specs("allgraphs:3")[0]).size() == 8);
    CHECK(generate(parse_family_specs("alltrees:4")[0]).size() == 16);
    CHECK(generate(parse_family_specs("complete:4")[0])[0] == complete_graph(4));
}
