#pragma once

#include "majicolor/construct/combine.hpp"
#include "majicolor/construct/two_coloring.hpp"
#include "majicolor/exact.hpp"
#include "majicolor/family.hpp"
#include "majicolor/verify.hpp"

namespace majicolor::construct {

namespace detail {

// Spider with legs of lengths 1, 2 and n-4 from a degree-3 center: an
// asymmetric spanning tree of K_n with maximum degree 3, for n >= 7.
inline Graph asymmetric_spider(int n) {
    std::vector<std::pair<int, int>> es;
    es.push_back({0, 1});
    es.push_back({0, 2});
    es.push_back({2, 3});
    es.push_back({0, 4});
    for (int v = 4; v + 1 < n; ++v) es.push_back({v, v + 1});
    return Graph::from_pairs(n, es);
}

inline EdgeColoring fig1_coloring(const Graph &g, int n) {
    EdgeColoring c(g, Palette::plain(3));
    auto set = [&](int u, int v, int col) { c.colors[*g.edge_id(u - 1, v - 1)] = col; };
    const int green = 0, red = 1, blue = 2;
    if (n == 5) {
        set(1, 2, green), set(2, 3, green), set(3, 4, green), set(4, 5, green);
        set(1, 3, red), set(1, 4, red), set(2, 5, red);
        set(1, 5, blue), set(2, 4, blue), set(3, 5, blue);
    } else {
        set(1, 2, green), set(2, 3, green), set(3, 4, green), set(4, 5, green), set(5, 6, green);
        set(1, 3, red), set(1, 4, red), set(2, 5, red), set(2, 6, red), set(3, 6, red);
        set(1, 5, blue), set(1, 6, blue), set(2, 4, blue), set(3, 5, blue), set(4, 6, blue);
    }
    return c;
}

} // namespace detail

// Majority distinguishing coloring of K_n: exact optimum for n in {3,4},
// the explicit two-path colorings for n in {5,6}, and green asymmetric
// spanning tree + balanced red/blue completion for n >= 7.
inline EdgeColoring color_complete(int n) {
    if (n < 3) throw Error("color_complete needs n >= 3");
    Graph g = generate({FamilyKind::complete, {n}});
    if (n <= 4) {
        auto r = exact_index(g, IndexKind::proper_distinguishing, 6);
        if (r.status != ExactStatus::found) throw VerifierRejected("exact search failed");
        return *r.witness;
    }
    if (n <= 6) {
        EdgeColoring c = detail::fig1_coloring(g, n);
        if (!verify_majority_distinguishing(g, c).pass)
            throw VerifierRejected("fixture coloring rejected");
        return c;
    }
    Graph t = detail::asymmetric_spider(n);
    if (!is_asymmetric(t)) throw VerifierRejected("spider tree is not asymmetric");
    EdgeColoring out(g, Palette::plain(3));
    for (const Edge &e : t.edges()) out.colors[*g.edge_id(e.u, e.v)] = 0; // green tree
    Graph rest = graph_minus(g, t);
    bool used_third = false;
    EdgeColoring c_rest = detail::rest_two_coloring(g, rest, {}, used_third);
    for (int id = 0; id < rest.num_edges(); ++id)
        out.colors[*g.edge_id(rest.edge(id).u, rest.edge(id).v)] = 1 + c_rest.colors[id];
    auto rep = verify_majority_distinguishing(g, out);
    if (!rep.pass || out.colors_used() > 3) throw VerifierRejected("K_n coloring rejected");
    return out;
}

// Green spanning path plus balanced red/blue completion; the path-end
// asymmetry device breaks the reversal when it is an automorphism of g.
inline EdgeColoring color_traceable_mindeg4(const Graph &g, const std::vector<int> &p) {
    int n = g.num_vertices();
    if ((int)p.size() != n) throw PathNotSpanning("path must visit every vertex");
    std::vector<char> seen(n, 0);
    for (int v : p) {
        if (v < 0 || v >= n || seen[v]) throw PathNotSpanning("not a permutation of V");
        seen[v] = 1;
    }
    for (int i = 0; i + 1 < n; ++i)
        if (!g.has_edge(p[i], p[i + 1])) throw PathNotSpanning("consecutive pair not adjacent");
    if (g.min_degree() < 4) throw MinDegreeTooSmall("needs minimum degree 4");

    const int green = 0, red = 1, blue = 2;
    EdgeColoring out(g, Palette::plain(3));
    for (int i = 0; i + 1 < n; ++i) out.colors[*g.edge_id(p[i], p[i + 1])] = green;

    // does the path reversal extend to an automorphism of g?
    std::vector<int> rev(n);
    for (int i = 0; i < n; ++i) rev[p[i]] = p[n - 1 - i];
    bool reversal_auto = true;
    for (const Edge &e : g.edges())
        if (!g.has_edge(rev[e.u], rev[e.v])) {
            reversal_auto = false;
            break;
        }

    std::vector<std::pair<int, int>> precolored; // (edge id, color)
    if (reversal_auto) {
        int j = -1;
        for (int i = 2; i < n && j < 0; ++i)
            if (g.has_edge(p[0], p[i])) j = i;
        if (j < 0) throw Error("degree >= 4 guarantees a chord at the path start");
        int jm = n - 1 - j;
        precolored.push_back({*g.edge_id(p[0], p[j]), red});
        precolored.push_back({*g.edge_id(p[jm], p[n - 1]), blue});
        if (g.degree(p[0]) % 2 == 1) {
            int j2 = -1;
            for (int i = 2; i < n - 1 && j2 < 0; ++i)
                if (i != j && i != jm && g.has_edge(p[0], p[i])) j2 = i;
            if (j2 < 0) throw Error("odd degree >= 5 guarantees a second chord");
            precolored.push_back({*g.edge_id(p[0], p[j2]), blue});
            precolored.push_back({*g.edge_id(p[n - 1 - j2], p[n - 1]), red});
        }
        for (auto [id, col] : precolored) out.colors[id] = col;
    }

    std::vector<int> rest_ids;
    for (int id = 0; id < g.num_edges(); ++id)
        if (out.colors[id] == kUncolored) rest_ids.push_back(id);
    if (!rest_ids.empty()) {
        Graph rest = edge_subgraph(g, rest_ids);
        bool used_third = false;
        EdgeColoring c_rest = detail::rest_two_coloring(g, rest, {p[0], p[n - 1]}, used_third);
        if (used_third) throw VerifierRejected("completion needed a third color");
        for (int id = 0; id < rest.num_edges(); ++id) {
            const Edge &e = rest.edge(id);
            out.colors[*g.edge_id(e.u, e.v)] = red + c_rest.colors[id];
        }
    }
    auto rep = verify_majority_distinguishing(g, out);
    if (!rep.pass || out.colors_used() > 3) throw VerifierRejected("traceable coloring rejected");
    return out;
}

inline int k2n_colors_needed(int n) {
    int k = 2;
    while (k * (k - 1) - 1 < n) ++k;
    return k;
}

// Majority distinguishing coloring of K_{2,n} with exactly min{k:k(k-1)-1>=n}
// colors. Each Y vertex receives a distinct ordered pair of distinct colors;
// the pair (2,1) is always used, (1,2) never, and pairs are drawn along
// diagonals so both X vertices stay balanced.
inline EdgeColoring color_K2n(int n) {
    if (n < 3) throw Error("color_K2n needs n >= 3");
    int k = k2n_colors_needed(n);
    Graph g = generate({FamilyKind::complete_bipartite, {2, n}});
    EdgeColoring out(g, Palette::plain(k));

    // pair stream: the (k-1)-diagonal starting at (1,0) == "(2,1)", then
    // diagonals 1..k-2 skipping (0,1) == "(1,2)"
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < k; ++i) pairs.push_back({(1 + i) % k, i % k});
    for (int d = 1; d + 1 < k; ++d)
        for (int i = 0; i < k; ++i) {
            if (d == 1 && i == 0) continue;
            pairs.push_back({i, (i + d) % k});
        }
    if ((int)pairs.size() < n) throw Error("internal pair stream too short");

    for (int y = 0; y < n; ++y) {
        out.colors[*g.edge_id(0, 2 + y)] = pairs[y].first;
        out.colors[*g.edge_id(1, 2 + y)] = pairs[y].second;
    }
    auto rep = verify_majority_distinguishing(g, out);
    if (!rep.pass) throw VerifierRejected("K_{2,n} coloring rejected");
    if (out.colors_used() != k) throw VerifierRejected("K_{2,n} color count mismatch");
    return out;
}

} // namespace majicolor::construct
