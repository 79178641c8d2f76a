#pragma once

// Test-only oracles, independent of the library's search machinery: plain n!
// enumeration for automorphism counts and small brute-force searches. Nothing
// here may call into majicolor::engine.

#include <algorithm>
#include <numeric>
#include <vector>

#include "majicolor/coloring.hpp"
#include "majicolor/graph.hpp"
#include "majicolor/rng.hpp"

namespace naive {

using majicolor::Edge;
using majicolor::Graph;

inline bool perm_is_automorphism(const Graph &g, const std::vector<int> &p) {
    for (const Edge &e : g.edges())
        if (!g.has_edge(p[e.u], p[e.v])) return false;
    return true;
}

inline bool perm_preserves_coloring(const Graph &g, const majicolor::EdgeColoring &c,
                                    const std::vector<int> &p) {
    for (int id = 0; id < g.num_edges(); ++id) {
        const Edge &e = g.edge(id);
        auto mapped = g.edge_id(p[e.u], p[e.v]);
        if (!mapped || c.colors[*mapped] != c.colors[id]) return false;
    }
    return true;
}

// All automorphisms by n! enumeration; fine for n <= 9.
inline std::vector<std::vector<int>> all_automorphisms(const Graph &g) {
    int n = g.num_vertices();
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        if (perm_is_automorphism(g, p)) out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

inline uint64_t aut_order(const Graph &g) { return all_automorphisms(g).size(); }

inline uint64_t color_preserving_order(const Graph &g, const majicolor::EdgeColoring &c) {
    uint64_t count = 0;
    for (const auto &p : all_automorphisms(g))
        if (perm_preserves_coloring(g, c, p)) ++count;
    return count;
}

inline uint64_t stabilizer_order(const Graph &g, const std::vector<int> &fixed) {
    uint64_t count = 0;
    for (const auto &p : all_automorphisms(g)) {
        bool ok = true;
        for (int v : fixed) ok = ok && p[v] == v;
        if (ok) ++count;
    }
    return count;
}

inline bool is_asymmetric(const Graph &g) {
    int n = g.num_vertices();
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    bool identity = true;
    do {
        if (!identity && perm_is_automorphism(g, p)) return false;
        identity = false;
    } while (std::next_permutation(p.begin(), p.end()));
    return true;
}

// Connected random graph with all degrees >= min_deg: random spanning tree
// plus random extra edges, then random edges patched in at low-degree
// vertices until the floor holds.
inline Graph random_connected_min_deg(int n, int extra_edges, int min_deg, majicolor::Rng &rng) {
    std::vector<std::pair<int, int>> es;
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(order);
    for (int i = 1; i < n; ++i) es.push_back({order[rng.below(i)], order[i]});
    auto has = [&](int a, int b) {
        for (auto [x, y] : es)
            if ((x == a && y == b) || (x == b && y == a)) return true;
        return false;
    };
    for (int t = 0; t < extra_edges; ++t) {
        int a = rng.below(n), b = rng.below(n);
        if (a != b && !has(a, b)) es.push_back({a, b});
    }
    for (int guard = 0; guard < 100 * n; ++guard) {
        std::vector<int> deg(n, 0);
        for (auto [a, b] : es) {
            ++deg[a];
            ++deg[b];
        }
        int v = -1;
        for (int i = 0; i < n; ++i)
            if (deg[i] < min_deg) v = i;
        if (v < 0) break;
        int w = rng.below(n);
        if (w != v && !has(v, w)) es.push_back({v, w});
    }
    return Graph::from_pairs(n, es);
}

} // namespace naive
