#pragma once

#include <algorithm>
#include <chrono>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "kdefect/engine.hpp"
#include "kdefect/families.hpp"
#include "kdefect/graph_io.hpp"
#include "kdefect/json_io.hpp"

namespace kdefect {

/// One failing instance. `graph` is edge-list text: feeding it (with k) back
/// through the engine reproduces `actual`. Claims that are not about a single
/// k use -1 there; C14 stores the offending root instead.
struct Counterexample {
    std::string graph;
    int k = -1;
    std::string expected, actual;
};

struct ClaimReport {
    std::string claim;
    std::string corpus;
    long long checked = 0;
    bool pass = false;
    std::vector<Counterexample> counterexamples;
    double ms = 0.0;
    std::vector<std::string> notes;
};

struct ClaimInfo {
    std::string id;
    std::string title;
    std::vector<std::string> default_corpus;
};

struct VerifyOptions {
    bool stop_at_first = false;
};

inline const std::vector<ClaimInfo>& list_claims() {
    static const std::vector<ClaimInfo> catalog = {
        {"C1", "defect polynomials sum to the count of all colorings (coefficientwise)",
         {"allgraphs:5"}},
        {"C2", "the k = 0 slice equals the chromatic polynomial",
         {"allgraphs:5"}},
        {"C3", "subgraph defect numbers never exceed the host graph's, 0 standing for infeasible",
         {"allgraphs:4"}},
        {"C4", "the all-edges row always has defect number 1",
         {"allgraphs:5"}},
        {"C5", "defect number 1 occurs exactly at k = m",
         {"allgraphs:5"}},
        {"C6", "defect number equals the least chromatic number over size-k flat contractions",
         {"allgraphs:5"}},
        {"C7", "the flat-contraction minimum under both readings: chromatic number and clique number",
         {"allgraphs:4", "cycle:5..6"}},
        {"C8", "every k strictly between m minus the edge connectivity and m is infeasible",
         {"wheel:4..8", "cycle:3..10", "complete:3..6"}},
        {"C9", "closed-form tree, cycle, and wheel defect numbers and the wheel two-coloring minimum match the engine",
         {"wheel:4..8", "cycle:3..10", "alltrees:2..7"}},
        {"C10", "phi_k is nonzero exactly when a closed set of size k exists",
         {"allgraphs:5"}},
        {"C11", "flat contractions: chromatic number at least clique number, and 2 exactly for non-empty bipartite",
         {"allgraphs:5"}},
        {"C12", "the closed-form infeasible-k set of complete graphs equals the flats-derived complement",
         {"complete:4..7"}},
        {"C13", "bipartite per-k equivalence: defect number 2 iff k is an independent degree sum",
         {"allgraphs:6"}},
        {"C14", "chromatic quotients keep no positive integer root once the forced falling prefix is stripped",
         {"allgraphs:5", "alltrees:2..7"}},
    };
    return catalog;
}

namespace detail {

struct ClaimRun {
    VerifyOptions opt;
    ClaimReport* report;
    bool stopped = false;

    void count() { ++report->checked; }
    void fail(std::string graph_text, int k, std::string expected, std::string actual) {
        if (stopped) return;
        report->counterexamples.push_back(
            {std::move(graph_text), k, std::move(expected), std::move(actual)});
        if (opt.stop_at_first) stopped = true;
    }
    void note(std::string text) { report->notes.push_back(std::move(text)); }
};

inline std::vector<Graph> build_corpus(const std::vector<std::string>& specs) {
    std::vector<Graph> graphs;
    for (const std::string& s : specs)
        for (const FamilySpec& spec : parse_family_specs(s))
            for (Graph& g : generate(spec)) graphs.push_back(std::move(g));
    auto key = [](const Graph& g) {
        std::vector<std::pair<int, int>> ps;
        for (const Edge& e : g.edges()) ps.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
        std::sort(ps.begin(), ps.end());
        return std::tuple(g.vertex_count(), g.edge_count(), std::move(ps));
    };
    std::stable_sort(graphs.begin(), graphs.end(),
                     [&](const Graph& a, const Graph& b) { return key(a) < key(b); });
    return graphs;
}

inline std::vector<int> defect_numbers(const std::vector<Poly>& vec, int n) {
    std::vector<int> nums;
    nums.reserve(vec.size());
    for (const Poly& p : vec) nums.push_back(smallest_positive_support(p, std::max(n, 1)));
    return nums;
}

inline int flats_min(const Graph& g, int k, bool clique_reading) {
    int best = 0;
    for (const Flat& f : flats_of_size(g, k)) {
        Graph h = contract_set(g, f.edges);
        int value = clique_reading
                        ? clique_number(h)
                        : smallest_positive_support(chromatic_poly(h), std::max(h.vertex_count(), 1));
        if (best == 0 || value < best) best = value;
    }
    return best;
}

inline void check_c1(const std::vector<std::string>& specs, ClaimRun& run) {
    MemoCache cache;
    for (const Graph& g : build_corpus(specs)) {
        if (run.stopped) break;
        std::vector<Poly> vec = defect_vector_dc(g, &cache);
        Poly sum;
        for (const Poly& p : vec) sum += p;
        run.count();
        Poly want = Poly::monomial(g.vertex_count());
        if (!(sum == want))
            run.fail(format_edge_list(g), -1, want.latex(), sum.latex());
    }
}

inline void check_c2(const std::vector<std::string>& specs, ClaimRun& run) {
    MemoCache cache;
    for (const Graph& g : build_corpus(specs)) {
        if (run.stopped) break;
        Poly slice0 = defect_vector_dc(g, &cache)[0];
        Poly chi = chromatic_poly(g);
        run.count();
        if (!(slice0 == chi)) run.fail(format_edge_list(g), 0, chi.latex(), slice0.latex());
    }
}

inline void check_c3(const std::vector<std::string>& specs, ClaimRun& run) {
    MemoCache cache;
    for (const Graph& g : build_corpus(specs)) {
        if (run.stopped) break;
        int n = g.vertex_count(), m = g.edge_count();
        std::vector<int> host = defect_numbers(defect_vector_dc(g, &cache), n);
        std::vector<Graph> subs;
        for (uint32_t mask = 0; mask < (uint32_t(1) << m); ++mask) {
            std::vector<Edge> es;
            for (int i = 0; i < m; ++i)
                if (mask >> i & 1) es.push_back(g.edge(i));
            subs.push_back(Graph(n, std::move(es)));
        }
        for (uint32_t keep = 0; keep < (uint32_t(1) << n); ++keep) {
            std::vector<int> local(n, -1);
            int count = 0;
            for (int v = 0; v < n; ++v)
                if (keep >> v & 1) local[v] = count++;
            std::vector<Edge> es;
            for (const Edge& e : g.edges())
                if (local[e.u] >= 0 && local[e.v] >= 0) es.push_back({local[e.u], local[e.v]});
            subs.push_back(Graph(count, std::move(es)));
        }
        std::string host_text = format_edge_list(g);
        for (const Graph& h : subs) {
            if (run.stopped) break;
            std::vector<int> nums = defect_numbers(defect_vector_dc(h, &cache), h.vertex_count());
            for (int k = 0; k <= m; ++k) {
                run.count();
                int nh = k < (int)nums.size() ? nums[k] : 0;
                if (nh > host[k])
                    run.fail(format_edge_list(h), k,
                             "defect number at most " + std::to_string(host[k]) +
                                 ", the host graph's value; host graph:\n" + host_text,
                             std::to_string(nh));
            }
        }
    }
}

inline void check_c4(const std::vector<std::string>& specs, ClaimRun& run) {
    MemoCache cache;
    for (const Graph& g : build_corpus(specs)) {
        if (run.stopped) break;
        std::vector<int> nums = defect_numbers(defect_vector_dc(g, &cache), g.vertex_count());
        run.count();
        if (nums.back() != 1)
            run.fail(format_edge_list(g), g.edge_count(), "1", std::to_string(nums.back()));
    }
}

inline void check_c5(const std::vector<std::string>& specs, ClaimRun& run) {
    MemoCache cache;
    for (const Graph& g : build_corpus(specs)) {
        if (run.stopped) break;
        int m = g.edge_count();
        std::vector<int> nums = defect_numbers(defect_vector_dc(g, &cache), g.vertex_count());
        for (int k = 0; k <= m && !run.stopped; ++k) {
            run.count();
            bool is_one = nums[k] == 1, is_last = k == m;
            if (is_one != is_last)
                run.fail(format_edge_list(g), k,
                         is_last ? "defect number 1 at k = m" : "defect number other than 1 below k = m",
                         "defect number " + std::to_string(nums[k]));
        }
    }
}

inline void check_c6(const std::vector<std::string>& specs, ClaimRun& run) {
    MemoCache cache;
    for (const Graph& g : build_corpus(specs)) {
        if (run.stopped) break;
        int m = g.edge_count();
        std::vector<int> nums = defect_numbers(defect_vector_dc(g, &cache), g.vertex_count());
        for (int k = 0; k <= m && !run.stopped; ++k) {
            run.count();
            int want = flats_min(g, k, false);
            if (nums[k] != want)
                run.fail(format_edge_list(g), k,
                         "least chromatic number over size-k flat contractions: " + std::to_string(want),
                         "defect number " + std::to_string(nums[k]));
        }
    }
}

inline void check_c7(const std::vector<std::string>& specs, ClaimRun& run) {
    MemoCache cache;
    long long chrom_bad = 0, clique_bad = 0;
    for (const Graph& g : build_corpus(specs)) {
        if (run.stopped) break;
        int m = g.edge_count();
        std::vector<int> nums = defect_numbers(defect_vector_dc(g, &cache), g.vertex_count());
        for (int k = 0; k <= m && !run.stopped; ++k) {
            int chrom = flats_min(g, k, false);
            int clique = flats_min(g, k, true);
            run.count();
            if (nums[k] != chrom) {
                ++chrom_bad;
                run.fail(format_edge_list(g), k,
                         "chromatic-number reading: " + std::to_string(chrom),
                         "defect number " + std::to_string(nums[k]));
            }
            run.count();
            if (nums[k] != clique) {
                ++clique_bad;
                run.fail(format_edge_list(g), k,
                         "clique-number reading: " + std::to_string(clique),
                         "defect number " + std::to_string(nums[k]));
            }
        }
    }
    run.note("chromatic-number reading: " + std::to_string(chrom_bad) + " counterexamples");
    run.note("clique-number reading: " + std::to_string(clique_bad) +
             " counterexamples (the reading that does not survive)");
}

inline void check_c8(const std::vector<std::string>& specs, ClaimRun& run) {
    MemoCache cache;
    bool skipped_disconnected = false;
    for (const Graph& g : build_corpus(specs)) {
        if (run.stopped) break;
        if (components(g).count != 1) {
            skipped_disconnected = true;
            continue;
        }
        int m = g.edge_count();
        int lambda = edge_connectivity(g);
        std::vector<Poly> vec = defect_vector_dc(g, &cache);
        for (int k = m - lambda + 1; k < m && !run.stopped; ++k) {
            if (k < 0) continue;
            run.count();
            if (!vec[k].is_zero())
                run.fail(format_edge_list(g), k,
                         "zero polynomial inside the window m - edge_connectivity < k < m",
                         vec[k].latex());
        }
    }
    if (skipped_disconnected) run.note("disconnected corpus items skipped: the window needs a connected graph");
}

inline void check_c9(const std::vector<std::string>& specs, ClaimRun& run) {
    run.note("the wheel closed form's zero range \"0 if 2n-3 <= k <= 2n-4\" is empty as written; "
             "checked against the corrected pair {2n-4, 2n-3}");
    MemoCache cache;
    std::set<std::string> uncovered;
    for (const std::string& s : specs) {
        for (const FamilySpec& spec : parse_family_specs(s)) {
            if (run.stopped) break;
            bool tree_kind = spec.kind == FamilyKind::all_labeled_trees ||
                             spec.kind == FamilyKind::path || spec.kind == FamilyKind::star ||
                             spec.kind == FamilyKind::random_tree;
            if (!tree_kind && spec.kind != FamilyKind::cycle && spec.kind != FamilyKind::wheel) {
                uncovered.insert(spec.text);
                continue;
            }
            for (const Graph& g : generate(spec)) {
                if (run.stopped) break;
                int n = g.vertex_count(), m = g.edge_count();
                std::vector<int> nums = defect_numbers(defect_vector_dc(g, &cache), n);
                for (int k = 0; k <= m && !run.stopped; ++k) {
                    int want = tree_kind                        ? tree_defect_number(n, k)
                               : spec.kind == FamilyKind::cycle ? cycle_defect_number(n, k)
                                                                : wheel_defect_number(n, k);
                    run.count();
                    if (nums[k] != want)
                        run.fail(format_edge_list(g), k, "closed form " + std::to_string(want),
                                 "defect number " + std::to_string(nums[k]));
                }
                if (spec.kind == FamilyKind::wheel && !run.stopped) {
                    run.count();
                    int got = min_bad_edges(g, 2);
                    int want = wheel_min_bad_2col(n);
                    if (got != want)
                        run.fail(format_edge_list(g), -1,
                                 "two-coloring minimum floor(n/2) = " + std::to_string(want),
                                 std::to_string(got));
                }
            }
        }
    }
    for (const std::string& t : uncovered)
        run.note("no closed form covers corpus item " + t + "; skipped");
}

inline void check_c10(const std::vector<std::string>& specs, ClaimRun& run) {
    MemoCache cache;
    for (const Graph& g : build_corpus(specs)) {
        if (run.stopped) break;
        int m = g.edge_count();
        std::vector<Poly> vec = defect_vector_dc(g, &cache);
        std::set<int> feas = feasible_k(g);
        for (int k = 0; k <= m && !run.stopped; ++k) {
            run.count();
            bool has_flat = feas.count(k) > 0, nonzero = !vec[k].is_zero();
            if (has_flat != nonzero)
                run.fail(format_edge_list(g), k,
                         has_flat ? "nonzero polynomial (a closed set of size k exists)"
                                  : "zero polynomial (no closed set of size k)",
                         vec[k].latex());
        }
    }
}

inline void check_c11(const std::vector<std::string>& specs, ClaimRun& run) {
    for (const Graph& g : build_corpus(specs)) {
        if (run.stopped) break;
        int m = g.edge_count();
        for (int k = 0; k <= m && !run.stopped; ++k) {
            for (const Flat& f : flats_of_size(g, k)) {
                if (run.stopped) break;
                Graph h = contract_set(g, f.edges);
                int chi = smallest_positive_support(chromatic_poly(h), std::max(h.vertex_count(), 1));
                int omega = clique_number(h);
                run.count();
                if (chi < omega)
                    run.fail(format_edge_list(h), -1,
                             "chromatic number at least the clique number " + std::to_string(omega),
                             "chromatic number " + std::to_string(chi));
                if (h.edge_count() > 0) {
                    run.count();
                    bool chi2 = chi == 2, bip = bipartition(h).has_value();
                    if (chi2 != bip)
                        run.fail(format_edge_list(h), -1,
                                 bip ? "chromatic number 2 (non-empty bipartite)"
                                     : "chromatic number other than 2 (not bipartite)",
                                 "chromatic number " + std::to_string(chi));
                }
            }
        }
    }
}

inline void check_c12(const std::vector<std::string>& specs, ClaimRun& run) {
    bool covered_feasible = false;
    std::set<int> incomplete_at;
    for (const std::string& s : specs) {
        for (const FamilySpec& spec : parse_family_specs(s)) {
            if (run.stopped) break;
            for (const Graph& g : generate(spec)) {
                if (run.stopped) break;
                int n = g.vertex_count(), m = g.edge_count();
                if (n < 3 || m != (int)binomial(n, 2)) {
                    run.note("corpus item " + spec.text + " is not a complete graph on 3 or more vertices; skipped");
                    continue;
                }
                std::set<int> formula = kn_infeasible_set(n);
                std::set<int> feas = feasible_k(g);
                for (int k = 0; k <= m && !run.stopped; ++k) {
                    run.count();
                    bool infeasible = feas.count(k) == 0;
                    bool covered = formula.count(k) > 0;
                    if (infeasible == covered) continue;
                    if (infeasible) {
                        incomplete_at.insert(n);
                        run.fail(format_edge_list(g), k,
                                 "covered by the interval union (k is infeasible)",
                                 "missing from the interval union");
                    } else {
                        covered_feasible = true;
                        run.fail(format_edge_list(g), k,
                                 "outside the interval union (k is feasible)",
                                 "wrongly covered by the interval union");
                    }
                }
            }
        }
    }
    if (!covered_feasible)
        run.note("every k inside the interval union was confirmed infeasible; "
                 "the counterexamples are infeasible sizes the union misses");
    for (int n : incomplete_at)
        run.note("interval union incomplete at n = " + std::to_string(n));
}

inline void check_c13(const std::vector<std::string>& specs, ClaimRun& run) {
    MemoCache cache;
    long long two_without_sum = 0, sum_without_two = 0;
    for (const Graph& g : build_corpus(specs)) {
        if (run.stopped) break;
        if (components(g).count != 1 || !bipartition(g).has_value()) continue;
        int m = g.edge_count();
        if (m < 2) continue;
        std::set<int> sums = independent_degree_sums(g);
        std::vector<int> nums = defect_numbers(defect_vector_dc(g, &cache), g.vertex_count());
        for (int k = 1; k <= m - 1 && !run.stopped; ++k) {
            run.count();
            bool two = nums[k] == 2, in_sums = sums.count(k) > 0;
            if (two == in_sums) continue;
            if (two) {
                ++two_without_sum;
                run.fail(format_edge_list(g), k, "k an independent degree sum (defect number is 2)",
                         "defect number 2 but no independent set has degree sum k");
            } else {
                ++sum_without_two;
                run.fail(format_edge_list(g), k, "defect number 2 (k is an independent degree sum)",
                         "defect number " + std::to_string(nums[k]));
            }
        }
    }
    run.note("defect number 2 without a matching degree sum: " + std::to_string(two_without_sum) +
             " instances");
    run.note("degree sum without defect number 2: " + std::to_string(sum_without_two) + " instances");
    if (sum_without_two == 0)
        run.note("the direction 'independent degree sum implies defect number 2' survived on this corpus");
}

inline void check_c14(const std::vector<std::string>& specs, ClaimRun& run) {
    run.note("counterexamples are expected here: a repeated chromatic root stays in the quotient "
             "(any tree on 3 or more vertices); the k column holds the vanishing integer");
    for (const Graph& g : build_corpus(specs)) {
        if (run.stopped) break;
        Poly chi = chromatic_poly(g);
        if (chi.is_zero()) continue;
        FallingPrefix fp = falling_prefix(chi);
        run.count();
        for (int x = 1; x <= g.vertex_count(); ++x) {
            if (fp.quotient(Int(x)).is_zero()) {
                run.fail(format_edge_list(g), x,
                         "no positive integer root in the quotient after the falling prefix",
                         "quotient " + fp.quotient.latex() + " vanishes at " + std::to_string(x));
                break;
            }
        }
    }
}

} // namespace detail

/// Replays one claim over a corpus (family spec strings; the claim's default
/// corpus when empty). Deterministic: corpus sorted by vertex count, edge
/// count, then edge list, so the first counterexample is minimal.
inline ClaimReport run_claim(const std::string& id, std::vector<std::string> corpus = {},
                             const VerifyOptions& opt = {}) {
    const ClaimInfo* info = nullptr;
    for (const ClaimInfo& c : list_claims())
        if (c.id == id) info = &c;
    if (!info) throw Error("unknown claim id \"" + id + "\"");
    if (corpus.empty()) corpus = info->default_corpus;

    ClaimReport report;
    report.claim = id;
    for (size_t i = 0; i < corpus.size(); ++i)
        report.corpus += (i ? "," : "") + corpus[i];
    detail::ClaimRun run{opt, &report};

    auto t0 = std::chrono::steady_clock::now();
    if (id == "C1") detail::check_c1(corpus, run);
    else if (id == "C2") detail::check_c2(corpus, run);
    else if (id == "C3") detail::check_c3(corpus, run);
    else if (id == "C4") detail::check_c4(corpus, run);
    else if (id == "C5") detail::check_c5(corpus, run);
    else if (id == "C6") detail::check_c6(corpus, run);
    else if (id == "C7") detail::check_c7(corpus, run);
    else if (id == "C8") detail::check_c8(corpus, run);
    else if (id == "C9") detail::check_c9(corpus, run);
    else if (id == "C10") detail::check_c10(corpus, run);
    else if (id == "C11") detail::check_c11(corpus, run);
    else if (id == "C12") detail::check_c12(corpus, run);
    else if (id == "C13") detail::check_c13(corpus, run);
    else detail::check_c14(corpus, run);
    auto t1 = std::chrono::steady_clock::now();

    report.ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    report.pass = report.counterexamples.empty() && report.checked > 0;
    return report;
}

inline ojson report_to_json(const ClaimReport& r) {
    ojson ces = ojson::array();
    for (const Counterexample& ce : r.counterexamples)
        ces.push_back(ojson{{"graph", ce.graph}, {"k", ce.k}, {"expected", ce.expected}, {"actual", ce.actual}});
    return ojson{{"claim", r.claim},
                 {"corpus", r.corpus},
                 {"checked", r.checked},
                 {"outcome", r.pass ? "pass" : "counterexamples"},
                 {"counterexamples", ces},
                 {"ms", r.ms},
                 {"notes", r.notes}};
}

} // namespace kdefect
