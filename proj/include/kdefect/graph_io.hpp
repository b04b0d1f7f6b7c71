#pragma once

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "kdefect/graph.hpp"

namespace kdefect {

/// Parses the edge-list text format:
///
///   n 4        vertex count, once, before any edge
///   e 0 1      one edge; repeat a line for a parallel edge, "e 2 2" is a loop
///   # ...      comment (also allowed after a directive)
///
/// Unrecognized lines are skipped unless `strict` is set.
inline Graph parse_edge_list(const std::string& text, bool strict = false) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0, n = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;
        if (head == "n") {
            if (n >= 0) throw ParseError(lineno, "duplicate vertex count");
            if (!edges.empty()) throw ParseError(lineno, "vertex count after edges");
            if (!(ls >> n) || n < 0) throw ParseError(lineno, "bad vertex count");
        } else if (head == "e") {
            if (n < 0) throw ParseError(lineno, "edge before vertex count");
            int u, v;
            if (!(ls >> u >> v)) throw ParseError(lineno, "bad edge line");
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw ParseError(lineno, "edge endpoint out of range");
            edges.push_back({u, v});
        } else if (strict) {
            throw ParseError(lineno, "unrecognized line");
        }
        std::string junk;
        if (strict && ls >> junk) throw ParseError(lineno, "trailing characters");
    }
    if (n < 0) throw ParseError(0, "missing vertex count");
    return Graph(n, std::move(edges));
}

/// Parses one line of graph6 (the simple-graph flavor; sparse6 and digraph6
/// are rejected). An optional ">>graph6<<" header is allowed.
inline Graph parse_graph6(const std::string& line_in) {
    std::string s = line_in;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
    if (s.rfind(">>graph6<<", 0) == 0) s.erase(0, 10);
    if (s.empty()) throw ParseError(0, "empty graph6 string");
    if (s[0] == ':' || s[0] == ';') throw ParseError(0, "sparse6 input is not supported");
    if (s[0] == '&') throw ParseError(0, "digraph6 input is not supported");
    size_t pos = 0;
    auto take = [&]() {
        if (pos >= s.size()) throw ParseError(0, "truncated graph6 string");
        unsigned char c = s[pos++];
        if (c < 63 || c > 126) throw ParseError(0, "graph6 byte out of range");
        return int(c) - 63;
    };
    long long n;
    int first = take();
    if (first < 63) {
        n = first;
    } else if (pos < s.size() && s[pos] == 126) {
        throw ParseError(0, "graph6 vertex count too large");
    } else {
        n = 0;
        for (int i = 0; i < 3; ++i) n = n << 6 | take();
    }
    if (n > 1000) throw ParseError(0, "graph6 vertex count too large");
    std::vector<Edge> edges;
    int bits = 0, value = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            if (bits == 0) {
                value = take();
                bits = 6;
            }
            --bits;
            if (value >> bits & 1) edges.push_back({i, j});
        }
    if (pos != s.size()) throw ParseError(0, "trailing characters after graph6 data");
    return Graph((int)n, std::move(edges));
}

/// Accepts either format: edge-list text when an "n" directive appears first,
/// graph6 otherwise.
inline Graph parse_graph_text(const std::string& text, bool strict = false) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        size_t i = line.find_first_not_of(" \t\r");
        if (i == std::string::npos) continue;
        if (line[i] == 'n' || line[i] == 'e') return parse_edge_list(text, strict);
        return parse_graph6(line.substr(i));
    }
    throw ParseError(0, "empty input");
}

inline std::string format_edge_list(const Graph& g) {
    std::string out = "n " + std::to_string(g.vertex_count()) + "\n";
    for (const Edge& e : g.edges())
        out += "e " + std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    return out;
}

} // namespace kdefect
