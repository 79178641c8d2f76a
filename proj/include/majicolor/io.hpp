#pragma once

#include <cctype>
#include <sstream>
#include <string>
#include <string_view>

#include "majicolor/graph.hpp"

namespace majicolor {

enum class GraphFormat { graph6, edge_list, dimacs };

namespace detail {

inline bool g6_byte_ok(char c) { return c >= 63 && c <= 126; }

inline int parse_g6_order(std::string_view s, size_t &pos) {
    if (pos >= s.size()) throw MalformedInput("empty graph6 string", pos);
    unsigned char c = s[pos];
    if (!g6_byte_ok(c)) throw MalformedInput("invalid graph6 byte", pos);
    if (c != 126) {
        ++pos;
        return c - 63;
    }
    // '~' prefix: 3-byte (n <= 258047) or, with '~~', 6-byte order field
    ++pos;
    if (pos < s.size() && (unsigned char)s[pos] == 126)
        throw MalformedInput("graph6 orders beyond 258047 unsupported", pos);
    long n = 0;
    for (int i = 0; i < 3; ++i, ++pos) {
        if (pos >= s.size() || !g6_byte_ok(s[pos])) throw MalformedInput("truncated graph6 order", pos);
        n = (n << 6) | (s[pos] - 63);
    }
    return (int)n;
}

} // namespace detail

inline Graph parse_graph6(std::string_view text) {
    size_t pos = 0;
    while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
    if (pos < text.size() && text.compare(pos, 10, ">>graph6<<") == 0) pos += 10;
    int n = detail::parse_g6_order(text, pos);
    std::vector<Edge> edges;
    int bit = 0;
    unsigned cur = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (bit == 0) {
                if (pos >= text.size()) throw MalformedInput("truncated graph6 bit data", pos);
                if (!detail::g6_byte_ok(text[pos])) throw MalformedInput("invalid graph6 byte", pos);
                cur = (unsigned char)text[pos] - 63;
                ++pos;
                bit = 6;
            }
            --bit;
            if (cur & (1u << bit)) edges.emplace_back(i, j);
        }
    }
    while (pos < text.size()) {
        if (!std::isspace((unsigned char)text[pos])) throw MalformedInput("trailing bytes after graph6 data", pos);
        ++pos;
    }
    return Graph(n, std::move(edges));
}

inline std::string serialize_graph6(const Graph &g) {
    std::string out;
    int n = g.num_vertices();
    if (n < 63) {
        out.push_back((char)(n + 63));
    } else {
        out.push_back('~');
        out.push_back((char)(((n >> 12) & 63) + 63));
        out.push_back((char)(((n >> 6) & 63) + 63));
        out.push_back((char)((n & 63) + 63));
    }
    int bit = 6;
    unsigned cur = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            --bit;
            if (g.has_edge(i, j)) cur |= (1u << bit);
            if (bit == 0) {
                out.push_back((char)(cur + 63));
                cur = 0;
                bit = 6;
            }
        }
    }
    if (bit != 6) out.push_back((char)(cur + 63));
    return out;
}

// Whitespace edge list: header "n m", then m lines "u v" (0-indexed).
inline Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    long n = 0, m = 0;
    if (!(in >> n >> m)) throw MalformedInput("expected header 'n m'", 0);
    if (n < 0 || m < 0) throw MalformedInput("negative header value", 0);
    std::vector<Edge> edges;
    edges.reserve(m);
    for (long k = 0; k < m; ++k) {
        long u, v;
        if (!(in >> u >> v)) throw MalformedInput("expected edge 'u v'", (size_t)in.tellg());
        if (u < 0 || u >= n || v < 0 || v >= n) throw OutOfRangeVertex("edge endpoint outside [0,n)");
        edges.emplace_back((int)u, (int)v);
    }
    return Graph((int)n, std::move(edges));
}

inline std::string serialize_edge_list(const Graph &g) {
    std::ostringstream out;
    out << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (const Edge &e : g.edges()) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

// DIMACS: "p edge n m" and "e u v" lines, 1-indexed; "c" comment lines skipped.
inline Graph parse_dimacs(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    long n = -1, m = -1;
    std::vector<Edge> edges;
    size_t offset = 0;
    while (std::getline(in, line)) {
        size_t line_start = offset;
        offset += line.size() + 1;
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "p") {
            std::string kind;
            if (!(ls >> kind >> n >> m) || (kind != "edge" && kind != "col"))
                throw MalformedInput("bad problem line", line_start);
        } else if (tag == "e") {
            long u, v;
            if (!(ls >> u >> v)) throw MalformedInput("bad edge line", line_start);
            if (n < 0) throw MalformedInput("edge before problem line", line_start);
            if (u < 1 || u > n || v < 1 || v > n) throw OutOfRangeVertex("edge endpoint outside [1,n]");
            edges.emplace_back((int)u - 1, (int)v - 1);
        } else {
            throw MalformedInput("unknown dimacs line tag '" + tag + "'", line_start);
        }
    }
    if (n < 0) throw MalformedInput("missing problem line", 0);
    return Graph((int)n, std::move(edges));
}

inline std::string serialize_dimacs(const Graph &g) {
    std::ostringstream out;
    out << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (const Edge &e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
    return out.str();
}

inline Graph parse_graph(std::string_view text, GraphFormat fmt) {
    switch (fmt) {
    case GraphFormat::graph6: return parse_graph6(text);
    case GraphFormat::edge_list: return parse_edge_list(text);
    case GraphFormat::dimacs: return parse_dimacs(text);
    }
    throw Error("unreachable");
}

inline std::string serialize_graph(const Graph &g, GraphFormat fmt) {
    switch (fmt) {
    case GraphFormat::graph6: return serialize_graph6(g);
    case GraphFormat::edge_list: return serialize_edge_list(g);
    case GraphFormat::dimacs: return serialize_dimacs(g);
    }
    throw Error("unreachable");
}

} // namespace majicolor
