#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>

#include "majicolor/coloring.hpp"
#include "majicolor/graph.hpp"

namespace majicolor {

struct Permutation {
    std::vector<int> images;

    Permutation() = default;
    explicit Permutation(std::vector<int> im) : images(std::move(im)) {}
    static Permutation identity(int n) {
        std::vector<int> im(n);
        std::iota(im.begin(), im.end(), 0);
        return Permutation(std::move(im));
    }
    int size() const { return (int)images.size(); }
    int operator()(int v) const { return images[v]; }
    bool is_identity() const {
        for (int i = 0; i < size(); ++i)
            if (images[i] != i) return false;
        return true;
    }
    Permutation inverse() const {
        std::vector<int> im(size());
        for (int i = 0; i < size(); ++i) im[images[i]] = i;
        return Permutation(std::move(im));
    }
    friend auto operator<=>(const Permutation &, const Permutation &) = default;
};

struct AutGroup {
    std::vector<Permutation> generators; // none when the group is trivial
    uint64_t order = 1;
    bool order_exact = true;            // false when the order saturated uint64
    std::vector<int> fixed_vertices;    // pointwise-fixed context (stabilizers)

    bool is_trivial() const { return order == 1; }

    // orbit id per vertex under the generator closure
    std::vector<int> vertex_orbit_ids(int n) const {
        std::vector<int> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const auto &g : generators)
            for (int v = 0; v < n; ++v) {
                int a = find(v), b = find(g(v));
                if (a != b) parent[a] = b;
            }
        std::vector<int> ids(n);
        for (int v = 0; v < n; ++v) ids[v] = find(v);
        return ids;
    }
};

namespace engine {

// Vertex-colored graph with integer arc labels; the one substrate the search
// runs on. Undirected edges store the same label in both directions.
struct Labeled {
    int n = 0;
    std::vector<int32_t> lab; // n*n, 0 = non-edge
    std::vector<int> vcol;

    explicit Labeled(int n_) : n(n_), lab(n_ * n_, 0), vcol(n_, 0) {}
    int32_t at(int u, int v) const { return lab[u * n + v]; }
    void set(int u, int v, int32_t l) { lab[u * n + v] = l; }
    void set_sym(int u, int v, int32_t l) {
        lab[u * n + v] = l;
        lab[v * n + u] = l;
    }
};

using Part = std::vector<std::vector<int>>;

inline Part initial_partition(const Labeled &L) {
    std::map<int, std::vector<int>> by_col;
    for (int v = 0; v < L.n; ++v) by_col[L.vcol[v]].push_back(v);
    Part P;
    for (auto &[c, vs] : by_col) P.push_back(std::move(vs));
    return P;
}

inline std::vector<std::vector<int64_t>> signatures(const Labeled &L, const Part &S) {
    std::vector<int> cell_of(L.n, 0);
    for (int c = 0; c < (int)S.size(); ++c)
        for (int v : S[c]) cell_of[v] = c;
    std::vector<std::vector<int64_t>> sig(L.n);
    for (int v = 0; v < L.n; ++v) {
        auto &sv = sig[v];
        for (int w = 0; w < L.n; ++w) {
            if (w == v) continue;
            int32_t a = L.at(v, w), b = L.at(w, v);
            if (a == 0 && b == 0) continue;
            sv.push_back(((int64_t)cell_of[w] << 42) | ((int64_t)a << 21) | (int64_t)b);
        }
        std::sort(sv.begin(), sv.end());
    }
    return sig;
}

inline bool split_cells(Part &P, const std::vector<std::vector<int64_t>> &sig) {
    Part out;
    bool changed = false;
    for (auto &cell : P) {
        if (cell.size() == 1) {
            out.push_back(cell);
            continue;
        }
        std::map<std::vector<int64_t>, std::vector<int>> groups;
        for (int v : cell) groups[sig[v]].push_back(v);
        if (groups.size() > 1) changed = true;
        for (auto &[k, vs] : groups) out.push_back(std::move(vs));
    }
    P = std::move(out);
    return changed;
}

// Equitable refinement of P and Q in lockstep; false when the partitions'
// shapes or cell signatures diverge (no isomorphism respects them).
inline bool refine_lockstep(const Labeled &A, const Labeled &B, Part &P, Part &Q) {
    for (;;) {
        auto sa = signatures(A, P);
        auto sb = signatures(B, Q);
        bool ca = split_cells(P, sa);
        bool cb = split_cells(Q, sb);
        if (P.size() != Q.size()) return false;
        for (size_t i = 0; i < P.size(); ++i) {
            if (P[i].size() != Q[i].size()) return false;
            if (A.vcol[P[i][0]] != B.vcol[Q[i][0]]) return false;
            if (sa[P[i][0]] != sb[Q[i][0]]) return false;
        }
        if (!ca && !cb) return true;
    }
}

inline Part individualize(const Part &P, int cell, int v) {
    Part out;
    out.reserve(P.size() + 1);
    for (int i = 0; i < (int)P.size(); ++i) {
        if (i != cell) {
            out.push_back(P[i]);
            continue;
        }
        out.push_back({v});
        std::vector<int> rest;
        for (int w : P[i])
            if (w != v) rest.push_back(w);
        out.push_back(std::move(rest));
    }
    return out;
}

inline bool verify_map(const Labeled &A, const Labeled &B, const std::vector<int> &phi) {
    for (int u = 0; u < A.n; ++u) {
        if (A.vcol[u] != B.vcol[phi[u]]) return false;
        for (int v = 0; v < A.n; ++v)
            if (A.at(u, v) != B.at(phi[u], phi[v])) return false;
    }
    return true;
}

struct SearchCtx {
    const Labeled &A, &B;
    uint64_t nodes = 0;
    uint64_t node_cap = 200'000'000;
    std::function<bool(const std::vector<int> &)> sink{}; // false = stop search
    bool stopped = false;
};

inline void search_rec(SearchCtx &ctx, Part P, Part Q) {
    if (ctx.stopped) return;
    if (++ctx.nodes > ctx.node_cap) throw Error("isomorphism search node budget exceeded");
    if (!refine_lockstep(ctx.A, ctx.B, P, Q)) return;
    int target = -1;
    size_t best = SIZE_MAX;
    for (int i = 0; i < (int)P.size(); ++i)
        if (P[i].size() > 1 && P[i].size() < best) {
            best = P[i].size();
            target = i;
        }
    if (target < 0) {
        std::vector<int> phi(ctx.A.n);
        for (size_t i = 0; i < P.size(); ++i) phi[P[i][0]] = Q[i][0];
        if (verify_map(ctx.A, ctx.B, phi) && !ctx.sink(phi)) ctx.stopped = true;
        return;
    }
    int v = P[target][0];
    for (int u : Q[target]) {
        search_rec(ctx, individualize(P, target, v), individualize(Q, target, u));
        if (ctx.stopped) return;
    }
}

// First isomorphism A -> B respecting vertex colors, if any.
inline std::optional<Permutation> find_isomorphism(const Labeled &A, const Labeled &B) {
    if (A.n != B.n) return std::nullopt;
    std::optional<Permutation> found;
    SearchCtx ctx{A, B, 0, 200'000'000, {}, false};
    ctx.sink = [&](const std::vector<int> &phi) {
        found = Permutation(phi);
        return false;
    };
    search_rec(ctx, initial_partition(A), initial_partition(B));
    return found;
}

// First color-respecting automorphism of L other than the identity.
inline std::optional<Permutation> find_nonidentity_automorphism(const Labeled &L) {
    std::optional<Permutation> found;
    SearchCtx ctx{L, L, 0, 200'000'000, {}, false};
    ctx.sink = [&](const std::vector<int> &phi) {
        Permutation p(phi);
        if (p.is_identity()) return true;
        found = std::move(p);
        return false;
    };
    search_rec(ctx, initial_partition(L), initial_partition(L));
    return found;
}

inline uint64_t sat_mul(uint64_t a, uint64_t b, bool &exact) {
    if (b != 0 && a > UINT64_MAX / b) {
        exact = false;
        return UINT64_MAX;
    }
    return a * b;
}

// Stabilizer-chain construction: repeatedly compute the orbit of the first
// vertex of the first smallest non-singleton cell via existence searches,
// multiply orbit sizes, then individualize the base point and descend.
inline AutGroup build_group(Labeled L) {
    AutGroup G;
    int next_color = 0;
    for (int v = 0; v < L.n; ++v) next_color = std::max(next_color, L.vcol[v] + 1);
    for (;;) {
        Part P = initial_partition(L);
        Part Q = P;
        if (!refine_lockstep(L, L, P, Q)) throw Error("self refinement failed");
        int target = -1;
        size_t best = SIZE_MAX;
        for (int i = 0; i < (int)P.size(); ++i)
            if (P[i].size() > 1 && P[i].size() < best) {
                best = P[i].size();
                target = i;
            }
        if (target < 0) break;
        int v = P[target][0];
        uint64_t orbit = 1;
        for (int u : P[target]) {
            if (u == v) continue;
            Labeled Lv = L, Lu = L;
            Lv.vcol[v] = next_color;
            Lu.vcol[u] = next_color;
            if (auto phi = find_isomorphism(Lv, Lu)) {
                G.generators.push_back(std::move(*phi));
                ++orbit;
            }
        }
        G.order = sat_mul(G.order, orbit, G.order_exact);
        L.vcol[v] = next_color++;
    }
    return G;
}

inline Labeled from_graph(const Graph &g) {
    Labeled L(g.num_vertices());
    for (const Edge &e : g.edges()) L.set_sym(e.u, e.v, 1);
    return L;
}

inline Labeled from_digraph(const Digraph &d) {
    Labeled L(d.num_vertices());
    for (auto [u, v] : d.arcs()) L.set(u, v, std::max(L.at(u, v), (int32_t)1));
    return L;
}

// Partial colorings label uncolored edges 1 and color c edges 2+c, so a
// map preserving labels preserves both the structure and the colored part.
inline Labeled from_colored_graph(const Graph &g, const EdgeColoring &c) {
    Labeled L(g.num_vertices());
    for (int id = 0; id < g.num_edges(); ++id) {
        const Edge &e = g.edge(id);
        L.set_sym(e.u, e.v, c.colors[id] == kUncolored ? 1 : 2 + c.colors[id]);
    }
    return L;
}

inline Labeled from_colored_digraph(const Digraph &d, const ArcColoring &c) {
    Labeled L(d.num_vertices());
    for (int id = 0; id < d.num_arcs(); ++id) {
        auto [u, v] = d.arc(id);
        L.set(u, v, c.colors[id] == kUncolored ? 1 : 2 + c.colors[id]);
    }
    return L;
}

inline void fix_pointwise(Labeled &L, const std::vector<int> &fixed) {
    int next = 0;
    for (int v = 0; v < L.n; ++v) next = std::max(next, L.vcol[v] + 1);
    for (int v : fixed) L.vcol[v] = next++;
}

} // namespace engine

inline AutGroup automorphism_group(const Graph &g) { return engine::build_group(engine::from_graph(g)); }

inline AutGroup automorphism_group(const Digraph &d) { return engine::build_group(engine::from_digraph(d)); }

inline AutGroup stabilizer(const Graph &g, const std::vector<int> &fixed) {
    auto L = engine::from_graph(g);
    engine::fix_pointwise(L, fixed);
    AutGroup G = engine::build_group(std::move(L));
    G.fixed_vertices = fixed;
    return G;
}

inline bool is_asymmetric(const Graph &g) { return automorphism_group(g).is_trivial(); }

// Subgroup of Aut(g) (optionally within a pointwise stabilizer) preserving
// the edge coloring; trivial iff the coloring is distinguishing.
inline AutGroup color_preserving_group(const Graph &g, const EdgeColoring &c,
                                       const std::vector<int> &fixed = {}) {
    if (!c.total()) throw IncompleteColoring("coloring must be total");
    auto L = engine::from_colored_graph(g, c);
    engine::fix_pointwise(L, fixed);
    AutGroup G = engine::build_group(std::move(L));
    G.fixed_vertices = fixed;
    return G;
}

// Same, but tolerates partial colorings (uncolored edges must map to
// uncolored edges). Used by the layer-by-layer constructions.
inline AutGroup partial_color_preserving_group(const Graph &g, const EdgeColoring &c,
                                               const std::vector<int> &fixed = {}) {
    auto L = engine::from_colored_graph(g, c);
    engine::fix_pointwise(L, fixed);
    AutGroup G = engine::build_group(std::move(L));
    G.fixed_vertices = fixed;
    return G;
}

inline AutGroup color_preserving_group(const Digraph &d, const ArcColoring &c,
                                       const std::vector<int> &fixed = {}) {
    if (!c.total()) throw IncompleteColoring("arc coloring must be total");
    auto L = engine::from_colored_digraph(d, c);
    engine::fix_pointwise(L, fixed);
    AutGroup G = engine::build_group(std::move(L));
    G.fixed_vertices = fixed;
    return G;
}

// One non-identity color-preserving automorphism, if any (fail witness).
inline std::optional<Permutation> color_preserving_witness(const Graph &g, const EdgeColoring &c) {
    if (!c.total()) throw IncompleteColoring("coloring must be total");
    return engine::find_nonidentity_automorphism(engine::from_colored_graph(g, c));
}

inline std::optional<Permutation> color_preserving_witness(const Digraph &d, const ArcColoring &c) {
    if (!c.total()) throw IncompleteColoring("arc coloring must be total");
    return engine::find_nonidentity_automorphism(engine::from_colored_digraph(d, c));
}

// True iff some automorphism of g fixing `fixed` pointwise maps c1 onto c2.
inline bool colorings_isomorphic(const Graph &g, const EdgeColoring &c1, const EdgeColoring &c2,
                                 const std::vector<int> &fixed = {}) {
    if (!c1.total() || !c2.total()) throw IncompleteColoring("colorings must be total");
    std::map<int, int> h1, h2;
    for (int c : c1.colors) ++h1[c];
    for (int c : c2.colors) ++h2[c];
    if (h1 != h2) return false;
    auto A = engine::from_colored_graph(g, c1);
    auto B = engine::from_colored_graph(g, c2);
    engine::fix_pointwise(A, fixed);
    engine::fix_pointwise(B, fixed);
    return engine::find_isomorphism(A, B).has_value();
}

// Overload taking the group produced by automorphism_group/stabilizer on the
// same graph; its pointwise-fixed context is what constrains the search.
inline bool colorings_isomorphic(const Graph &g, const EdgeColoring &c1, const EdgeColoring &c2,
                                 const AutGroup &group) {
    return colorings_isomorphic(g, c1, c2, group.fixed_vertices);
}

// Isomorphism g1 -> g2 mapping anchors1[i] to anchors2[i], if one exists.
inline std::optional<Permutation> graphs_isomorphic(const Graph &g1, const Graph &g2,
                                                    const std::vector<int> &anchors1 = {},
                                                    const std::vector<int> &anchors2 = {}) {
    if (g1.num_vertices() != g2.num_vertices() || g1.num_edges() != g2.num_edges())
        return std::nullopt;
    if (g1.degree_sequence() != g2.degree_sequence()) return std::nullopt;
    auto A = engine::from_graph(g1);
    auto B = engine::from_graph(g2);
    engine::fix_pointwise(A, anchors1);
    engine::fix_pointwise(B, anchors2);
    return engine::find_isomorphism(A, B);
}

// Rooted variant for colored comparisons across copies of the same block:
// true iff some isomorphism (g1,anchors1) -> (g2,anchors2) carries c1 to c2.
inline bool colored_graphs_isomorphic(const Graph &g1, const EdgeColoring &c1,
                                      const Graph &g2, const EdgeColoring &c2,
                                      const std::vector<int> &anchors1 = {},
                                      const std::vector<int> &anchors2 = {}) {
    if (g1.num_vertices() != g2.num_vertices() || g1.num_edges() != g2.num_edges()) return false;
    auto A = engine::from_colored_graph(g1, c1);
    auto B = engine::from_colored_graph(g2, c2);
    engine::fix_pointwise(A, anchors1);
    engine::fix_pointwise(B, anchors2);
    return engine::find_isomorphism(A, B).has_value();
}

} // namespace majicolor
