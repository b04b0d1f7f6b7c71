#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "kdefect/engine.hpp"
#include "kdefect/families.hpp"
#include "kdefect/graph_io.hpp"
#include "kdefect/json_io.hpp"
#include "kdefect/verifier.hpp"

namespace kdefect {
namespace detail {

struct InputOpts {
    std::string file, family;
    bool strict = false;
    unsigned seed = 0;
    bool seed_set = false;
};

inline void add_input_opts(CLI::App* cmd, InputOpts& io) {
    auto* file = cmd->add_option("--file", io.file, "edge-list or graph6 file");
    auto* family = cmd->add_option("--family", io.family, "family spec, e.g. wheel:6 or kbipartite:3,4");
    file->excludes(family);
    family->excludes(file);
    cmd->add_flag("--strict", io.strict, "reject unknown edge-list lines");
    cmd->add_option("--seed", io.seed, "seed override for randomtree specs")
        ->each([&io](const std::string&) { io.seed_set = true; });
}

inline std::vector<Graph> load_graphs(const InputOpts& io) {
    if (io.file.empty() == io.family.empty())
        throw Error("exactly one of --file and --family is required");
    if (!io.file.empty()) {
        std::ifstream in(io.file);
        if (!in) throw Error("cannot open \"" + io.file + "\"");
        std::stringstream ss;
        ss << in.rdbuf();
        return {parse_graph_text(ss.str(), io.strict)};
    }
    std::vector<Graph> graphs;
    for (FamilySpec spec : parse_family_specs(io.family)) {
        if (io.seed_set && spec.kind == FamilyKind::random_tree) spec.seed = io.seed;
        for (Graph& g : generate(spec)) graphs.push_back(std::move(g));
    }
    return graphs;
}

inline Graph load_one_graph(const InputOpts& io) {
    std::vector<Graph> graphs = load_graphs(io);
    if (graphs.size() != 1)
        throw Error("input expands to " + std::to_string(graphs.size()) +
                    " graphs; this command needs exactly one");
    return std::move(graphs[0]);
}

inline std::string poly_csv(const Poly& p) {
    std::string s;
    for (int i = 0; i <= p.degree(); ++i) s += (i ? "," : "") + to_string(p[i]);
    return s.empty() ? "0" : s;
}

inline void print_json(std::ostream& out, const ojson& j) { out << j.dump(2) << "\n"; }

} // namespace detail

/// Command-line front end. `args` excludes the program name. Returns the
/// process exit code: 0 success, 1 usage or input error, 2 when verify found
/// counterexamples.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"k-defect polynomials and defect numbers of small graphs", "kdefect"};
    app.require_subcommand(1);

    detail::InputOpts in_poly, in_number, in_table, in_flats, in_witness, in_family;
    int k_poly = 0, k_number = 0, k_flats = 0, k_witness = 0;
    long long lambda = 0;
    bool lambda_set = false;
    std::string engine = "dc", fmt_poly = "json", fmt_table = "json", fmt_flats = "json";
    std::string fmt_family = "json", fmt_verify = "json";
    bool no_cache_poly = false, no_cache_number = false, no_cache_table = false;
    std::vector<std::string> claims, corpus, bench_corpus, bench_engines{"dc", "subset"};
    bool stop_first = false, list_claims_flag = false, bench_no_cache = false;

    auto fmt_check = CLI::IsMember({"json", "csv", "latex"});

    CLI::App* poly = app.add_subcommand("poly", "one defect polynomial, or its value at --lambda");
    detail::add_input_opts(poly, in_poly);
    poly->add_option("--k", k_poly, "defect count")->required()->check(CLI::NonNegativeNumber);
    poly->add_option("--lambda", lambda, "evaluate at this color count")
        ->check(CLI::NonNegativeNumber)
        ->each([&lambda_set](const std::string&) { lambda_set = true; });
    poly->add_option("--engine", engine, "dc, subset, or flats")
        ->check(CLI::IsMember({"dc", "subset", "flats"}));
    poly->add_option("--format", fmt_poly)->check(fmt_check);
    poly->add_flag("--no-cache", no_cache_poly, "disable memoization");

    CLI::App* number = app.add_subcommand("number", "defect number: least colors with exactly k bad edges");
    detail::add_input_opts(number, in_number);
    number->add_option("--k", k_number, "defect count")->required()->check(CLI::NonNegativeNumber);
    number->add_flag("--no-cache", no_cache_number, "disable memoization");

    CLI::App* table = app.add_subcommand("table", "full defect table for k = 0..m");
    detail::add_input_opts(table, in_table);
    table->add_option("--format", fmt_table)->check(fmt_check);
    table->add_flag("--no-cache", no_cache_table, "disable memoization");

    CLI::App* flats = app.add_subcommand("flats", "closed edge sets of size k");
    detail::add_input_opts(flats, in_flats);
    flats->add_option("--k", k_flats, "flat size")->required()->check(CLI::NonNegativeNumber);
    flats->add_option("--format", fmt_flats)->check(fmt_check);

    CLI::App* witness = app.add_subcommand("witness", "a coloring with exactly k bad edges at the defect number");
    detail::add_input_opts(witness, in_witness);
    witness->add_option("--k", k_witness, "defect count")->required()->check(CLI::NonNegativeNumber);
    std::string fmt_witness = "json";
    witness->add_option("--format", fmt_witness)->check(CLI::IsMember({"json"}));

    CLI::App* family = app.add_subcommand("family", "emit the graphs of a family spec");
    detail::add_input_opts(family, in_family);
    family->add_option("--format", fmt_family)->check(fmt_check);

    CLI::App* verify = app.add_subcommand("verify", "replay claims over graph corpora");
    verify->add_option("--claim", claims, "claim ids, e.g. C1,C9 (default: all)")->delimiter(',');
    verify->add_option("--corpus", corpus, "family specs overriding each claim's default")->delimiter(',');
    verify->add_flag("--stop-first", stop_first, "stop a claim at its first counterexample");
    verify->add_flag("--list", list_claims_flag, "list claims and default corpora, then exit");
    verify->add_option("--format", fmt_verify)->check(fmt_check);

    CLI::App* bench = app.add_subcommand("bench", "time engines over a corpus; CSV output");
    bench->add_option("--corpus", bench_corpus, "family specs")->required()->delimiter(',');
    bench->add_option("--engines", bench_engines, "subset of dc,subset,flats,brute")
        ->delimiter(',')
        ->check(CLI::IsMember({"dc", "subset", "flats", "brute"}));
    bench->add_flag("--no-cache", bench_no_cache, "disable memoization for dc");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*poly) {
            Graph g = detail::load_one_graph(in_poly);
            int m = g.edge_count();
            Poly p;
            if (k_poly <= m) {
                if (engine == "dc") {
                    MemoCache cache;
                    p = defect_vector_dc(g, no_cache_poly ? nullptr : &cache)[k_poly];
                } else if (engine == "subset") {
                    p = defect_vector_subset(g)[k_poly];
                } else {
                    p = defect_poly_flats(g, k_poly);
                }
            }
            if (lambda_set) {
                Int value = p(Int(lambda));
                if (fmt_poly == "json")
                    detail::print_json(out, ojson{{"k", k_poly}, {"lambda", lambda}, {"value", to_string(value)}});
                else
                    out << to_string(value) << "\n";
            } else if (fmt_poly == "latex") {
                out << p.latex() << "\n";
            } else if (fmt_poly == "csv") {
                out << detail::poly_csv(p) << "\n";
            } else {
                detail::print_json(out, ojson{{"n", g.vertex_count()},
                                              {"m", m},
                                              {"k", k_poly},
                                              {"poly", poly_to_json(p)},
                                              {"latex", p.latex()}});
            }
        } else if (*number) {
            Graph g = detail::load_one_graph(in_number);
            MemoCache cache;
            out << defect_number(g, k_number, no_cache_number ? nullptr : &cache) << "\n";
        } else if (*table) {
            Graph g = detail::load_one_graph(in_table);
            TableOptions opt;
            opt.use_cache = !no_cache_table;
            DefectTable t = defect_table(g, opt);
            if (fmt_table == "csv") {
                out << "k,number,feasible,poly\n";
                for (int k = 0; k < (int)t.rows.size(); ++k) {
                    const DefectRow& r = t.rows[k];
                    std::string coeffs;
                    for (int i = 0; i <= r.poly.degree(); ++i)
                        coeffs += (i ? " " : "") + to_string(r.poly[i]);
                    if (coeffs.empty()) coeffs = "0";
                    out << k << "," << r.number << "," << (r.feasible ? "true" : "false") << ","
                        << coeffs << "\n";
                }
            } else if (fmt_table == "latex") {
                for (int k = 0; k < (int)t.rows.size(); ++k)
                    out << "\\phi_{" << k << "} = " << t.rows[k].poly.latex() << "\n";
            } else {
                detail::print_json(out, table_to_json(t));
            }
        } else if (*flats) {
            Graph g = detail::load_one_graph(in_flats);
            std::vector<Flat> fs = flats_of_size(g, k_flats);
            if (fmt_flats == "json") {
                ojson arr = ojson::array();
                for (const Flat& f : fs) arr.push_back(flat_to_json(f));
                detail::print_json(out, ojson{{"n", g.vertex_count()},
                                              {"m", g.edge_count()},
                                              {"k", k_flats},
                                              {"count", (long long)fs.size()},
                                              {"flats", arr}});
            } else {
                for (const Flat& f : fs) {
                    out << "edges";
                    for (int e : f.edges) out << " " << e;
                    out << " | parts";
                    for (int b = 0; b < f.partition.count; ++b) {
                        out << " [";
                        bool first = true;
                        for (int v = 0; v < (int)f.partition.component.size(); ++v)
                            if (f.partition.component[v] == b) {
                                out << (first ? "" : " ") << v;
                                first = false;
                            }
                        out << "]";
                    }
                    out << "\n";
                }
            }
        } else if (*witness) {
            Graph g = detail::load_one_graph(in_witness);
            MemoCache cache;
            auto w = witness_coloring(g, k_witness, &cache);
            if (w)
                detail::print_json(out, witness_to_json(g, k_witness, *w));
            else
                detail::print_json(out, ojson{{"k", k_witness},
                                              {"colors", 0},
                                              {"assignment", ojson::array()},
                                              {"bad_edges", ojson::array()}});
        } else if (*family) {
            if (in_family.family.empty()) throw Error("family takes --family");
            std::vector<Graph> graphs = detail::load_graphs(in_family);
            if (fmt_family == "json") {
                ojson arr = ojson::array();
                for (const Graph& g : graphs) arr.push_back(graph_to_json(g));
                detail::print_json(out, ojson{{"count", (long long)graphs.size()}, {"graphs", arr}});
            } else {
                for (size_t i = 0; i < graphs.size(); ++i)
                    out << (i ? "\n" : "") << format_edge_list(graphs[i]);
            }
        } else if (*verify) {
            if (list_claims_flag) {
                ojson arr = ojson::array();
                for (const ClaimInfo& c : list_claims()) {
                    std::string specs;
                    for (size_t i = 0; i < c.default_corpus.size(); ++i)
                        specs += (i ? "," : "") + c.default_corpus[i];
                    if (fmt_verify == "json")
                        arr.push_back(ojson{{"claim", c.id}, {"title", c.title}, {"corpus", specs}});
                    else
                        out << c.id << ": " << c.title << " [" << specs << "]\n";
                }
                if (fmt_verify == "json") detail::print_json(out, arr);
                return 0;
            }
            if (claims.empty())
                for (const ClaimInfo& c : list_claims()) claims.push_back(c.id);
            VerifyOptions opt;
            opt.stop_at_first = stop_first;
            bool any = false;
            ojson arr = ojson::array();
            std::string csv = "claim,outcome,checked,counterexamples,ms\n";
            for (const std::string& id : claims) {
                ClaimReport r = run_claim(id, corpus, opt);
                any = any || !r.counterexamples.empty();
                arr.push_back(report_to_json(r));
                csv += r.claim + "," + (r.pass ? "pass" : "counterexamples") + "," +
                       std::to_string(r.checked) + "," + std::to_string(r.counterexamples.size()) +
                       "," + std::to_string(r.ms) + "\n";
            }
            if (fmt_verify == "csv")
                out << csv;
            else
                detail::print_json(out, arr);
            return any ? 2 : 0;
        } else if (*bench) {
            std::vector<Graph> graphs = detail::build_corpus(bench_corpus);
            out << "engine,instances,ms,cache_hits,cache_misses\n";
            for (const std::string& name : bench_engines) {
                MemoCache cache;
                auto t0 = std::chrono::steady_clock::now();
                for (const Graph& g : graphs) {
                    if (name == "dc") {
                        defect_vector_dc(g, bench_no_cache ? nullptr : &cache);
                    } else if (name == "subset") {
                        defect_vector_subset(g);
                    } else if (name == "flats") {
                        for (int k = 0; k <= g.edge_count(); ++k) defect_poly_flats(g, k);
                    } else {
                        brute_force_vector(g, 2);
                    }
                }
                auto t1 = std::chrono::steady_clock::now();
                double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
                out << name << "," << graphs.size() << "," << ms << "," << cache.hits() << ","
                    << cache.misses() << "\n";
            }
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace kdefect
