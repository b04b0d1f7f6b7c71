#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "kdefect/verifier.hpp"

using namespace kdefect;

TEST_CASE("claim catalog") {
    const auto& claims = list_claims();
    REQUIRE(claims.size() == 14);
    for (size_t i = 0; i < claims.size(); ++i) {
        CHECK(claims[i].id == "C" + std::to_string(i + 1));
        CHECK_FALSE(claims[i].title.empty());
        for (const std::string& spec : claims[i].default_corpus)
            CHECK_FALSE(parse_family_specs(spec).empty());
    }
    CHECK_THROWS_AS(run_claim("C99"), Error);
}

TEST_CASE("coefficient sum and chromatic slice") {
    ClaimReport r1 = run_claim("C1", {"allgraphs:3"});
    CHECK(r1.pass);
    CHECK(r1.checked == 8);
    CHECK(r1.counterexamples.empty());
    CHECK(r1.corpus == "allgraphs:3");

    ClaimReport r2 = run_claim("C2", {"allgraphs:3", "cycle:4..6"});
    CHECK(r2.pass);
    CHECK(r2.checked == 11);
}

TEST_CASE("subgraph monotonicity has counterexamples") {
    ClaimReport r = run_claim("C3", {"allgraphs:3"});
    CHECK_FALSE(r.pass);
    REQUIRE_FALSE(r.counterexamples.empty());
    auto hit = std::find_if(r.counterexamples.begin(), r.counterexamples.end(),
                            [](const Counterexample& ce) { return ce.k == 2; });
    REQUIRE(hit != r.counterexamples.end());
    CHECK(hit->actual == "1");
    Graph h = parse_edge_list(hit->graph);
    CHECK(defect_number(h, 2) == 1);
}

TEST_CASE("all-edges row and the k equals m boundary") {
    ClaimReport r4 = run_claim("C4");
    CHECK(r4.pass);
    CHECK(r4.checked == 1024);

    ClaimReport r5 = run_claim("C5", {"allgraphs:4"});
    CHECK(r5.pass);
}

TEST_CASE("defect number equals the flat-contraction minimum") {
    ClaimReport r = run_claim("C6", {"allgraphs:4"});
    CHECK(r.pass);
    CHECK(r.counterexamples.empty());
    CHECK(r.checked > 0);
}

TEST_CASE("clique reading of the flat minimum breaks on odd holes") {
    ClaimReport ok = run_claim("C7", {"allgraphs:4"});
    CHECK(ok.pass);

    ClaimReport bad = run_claim("C7", {"cycle:5"});
    CHECK_FALSE(bad.pass);
    REQUIRE(bad.counterexamples.size() == 1);
    CHECK(bad.counterexamples[0].k == 0);
    CHECK(bad.counterexamples[0].expected.find("clique") != std::string::npos);
    bool noted = false;
    for (const std::string& n : bad.notes)
        if (n.find("clique-number reading: 1 counterexamples") != std::string::npos) noted = true;
    CHECK(noted);
}

TEST_CASE("edge-connectivity window is infeasible") {
    ClaimReport r = run_claim("C8", {"cycle:3..8", "complete:3..5"});
    CHECK(r.pass);
    CHECK(r.checked > 0);
}

TEST_CASE("closed-form numbers for trees cycles wheels") {
    ClaimReport r = run_claim("C9", {"wheel:4..6", "cycle:3..6", "alltrees:2..4"});
    CHECK(r.pass);
    REQUIRE_FALSE(r.notes.empty());
    CHECK(r.notes[0].find("empty as written") != std::string::npos);

    ClaimReport skip = run_claim("C9", {"complete:4"});
    CHECK(skip.checked == 0);
    CHECK_FALSE(skip.pass);
    bool noted = false;
    for (const std::string& n : skip.notes)
        if (n.find("no closed form covers") != std::string::npos) noted = true;
    CHECK(noted);
}

TEST_CASE("feasibility matches flats") {
    ClaimReport r = run_claim("C10", {"allgraphs:4"});
    CHECK(r.pass);
}

TEST_CASE("contraction chromatic bounds") {
    ClaimReport r = run_claim("C11", {"allgraphs:4"});
    CHECK(r.pass);
}

TEST_CASE("complete graph interval union misses a size at n = 6") {
    ClaimReport good = run_claim("C12", {"complete:4..5"});
    CHECK(good.pass);

    ClaimReport bad = run_claim("C12", {"complete:4..6"});
    CHECK_FALSE(bad.pass);
    REQUIRE(bad.counterexamples.size() == 1);
    CHECK(bad.counterexamples[0].k == 5);
    CHECK(bad.counterexamples[0].actual.find("missing") != std::string::npos);
    bool incomplete = false, sound = false;
    for (const std::string& n : bad.notes) {
        if (n.find("incomplete at n = 6") != std::string::npos) incomplete = true;
        if (n.find("confirmed infeasible") != std::string::npos) sound = true;
    }
    CHECK(incomplete);
    CHECK(sound);
}

TEST_CASE("bipartite degree-sum equivalence report is self-consistent") {
    ClaimReport r = run_claim("C13", {"allgraphs:4"});
    CHECK(r.checked > 0);
    CHECK(r.pass == r.counterexamples.empty());
    for (const Counterexample& ce : r.counterexamples) {
        Graph g = parse_edge_list(ce.graph);
        std::set<int> sums = independent_degree_sums(g);
        bool two = defect_number(g, ce.k) == 2;
        CHECK(two != (sums.count(ce.k) > 0));
    }
}

TEST_CASE("falling-prefix root freeness fails on trees") {
    ClaimReport r = run_claim("C14", {"alltrees:4"});
    CHECK_FALSE(r.pass);
    CHECK(r.checked == 16);
    REQUIRE(r.counterexamples.size() == 16);
    for (const Counterexample& ce : r.counterexamples) {
        CHECK(ce.k == 1);
        Graph g = parse_edge_list(ce.graph);
        FallingPrefix fp = falling_prefix(chromatic_poly(g));
        CHECK(fp.quotient(Int(ce.k)).is_zero());
    }

    ClaimReport clean = run_claim("C14", {"allgraphs:2"});
    CHECK(clean.pass);

    VerifyOptions stop;
    stop.stop_at_first = true;
    ClaimReport first = run_claim("C14", {"alltrees:4"}, stop);
    CHECK(first.counterexamples.size() == 1);
}

TEST_CASE("reports are deterministic and serialize") {
    ClaimReport a = run_claim("C12", {"complete:4..6"});
    ClaimReport b = run_claim("C12", {"complete:4..6"});
    CHECK(a.checked == b.checked);
    REQUIRE(a.counterexamples.size() == b.counterexamples.size());
    for (size_t i = 0; i < a.counterexamples.size(); ++i) {
        CHECK(a.counterexamples[i].graph == b.counterexamples[i].graph);
        CHECK(a.counterexamples[i].k == b.counterexamples[i].k);
        CHECK(a.counterexamples[i].expected == b.counterexamples[i].expected);
        CHECK(a.counterexamples[i].actual == b.counterexamples[i].actual);
    }

    ojson j = report_to_json(a);
    CHECK(j.at("claim") == "C12");
    CHECK(j.at("outcome") == "counterexamples");
    CHECK(j.at("checked").get<long long>() == a.checked);
    CHECK(j.at("counterexamples").is_array());
    CHECK(j.at("ms").is_number());
    CHECK(j.at("notes").is_array());

    ojson p = report_to_json(run_claim("C1", {"cycle:3"}));
    CHECK(p.at("outcome") == "pass");
    CHECK(p.at("counterexamples").empty());
}
