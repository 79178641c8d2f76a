#pragma once

#include <optional>

#include "majicolor/automorphism.hpp"
#include "majicolor/coloring.hpp"
#include "majicolor/graph.hpp"
#include "majicolor/search.hpp"
#include "majicolor/verify.hpp"

namespace majicolor {

enum class ArcIndexKind { arc_majority, arc_majority_distinguishing };

enum class ExactStatus { found, infeasible_up_to_kmax, budget_exhausted };

struct ExactResult {
    ExactStatus status = ExactStatus::infeasible_up_to_kmax;
    int k = -1;
    std::optional<EdgeColoring> witness;
};

struct ExactArcResult {
    ExactStatus status = ExactStatus::infeasible_up_to_kmax;
    int k = -1;
    std::optional<ArcColoring> witness;
};

namespace detail {

inline bool kind_needs_majority(IndexKind k) {
    return k == IndexKind::majority || k == IndexKind::majority_distinguishing;
}
inline bool kind_needs_distinguishing(IndexKind k) {
    return k == IndexKind::distinguishing || k == IndexKind::majority_distinguishing ||
           k == IndexKind::proper_distinguishing;
}

// Fixed edge order: descending endpoint degree sum, preferring edges that
// saturate a vertex soon (the twin prune then cuts early).
inline std::vector<int> oracle_edge_order(const Graph &g) {
    int m = g.num_edges();
    std::vector<int> order;
    std::vector<char> chosen(m, 0);
    std::vector<int> rem(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) rem[v] = g.degree(v);
    for (int step = 0; step < m; ++step) {
        int best = -1;
        long best_key0 = -1;
        int best_key1 = 1 << 30;
        for (int id = 0; id < m; ++id) {
            if (chosen[id]) continue;
            const Edge &e = g.edge(id);
            long k0 = g.degree(e.u) + g.degree(e.v);
            int k1 = std::min(rem[e.u], rem[e.v]) - 1;
            if (k0 > best_key0 || (k0 == best_key0 && k1 < best_key1)) {
                best = id;
                best_key0 = k0;
                best_key1 = k1;
            }
        }
        chosen[best] = 1;
        --rem[g.edge(best).u];
        --rem[g.edge(best).v];
        order.push_back(best);
    }
    return order;
}

// Unordered pairs whose transposition is an automorphism (equal neighborhoods
// up to each other); once both endpoints are fully colored identically, no
// completion can be distinguishing.
inline std::vector<std::pair<int, int>> twin_pairs(const Graph &g) {
    std::vector<std::pair<int, int>> out;
    int n = g.num_vertices();
    std::vector<std::set<int>> nbr(n);
    for (int v = 0; v < n; ++v)
        for (auto [w, id] : g.neighbors(v)) {
            (void)id;
            nbr[v].insert(w);
        }
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            auto na = nbr[a], nb = nbr[b];
            na.erase(b);
            nb.erase(a);
            if (na == nb) out.push_back({a, b});
        }
    return out;
}

struct EdgeColorSearch {
    const Graph &g;
    IndexKind kind;
    int k;
    uint64_t budget;
    bool exhausted = false;
    bool aut_trivial;
    std::vector<int> order;
    std::vector<int> color; // per edge
    std::vector<std::vector<int>> cnt; // vertex x color
    std::vector<int> colored_deg;
    std::vector<std::vector<std::pair<int, int>>> twins_at; // vertex -> twin pairs
    std::optional<EdgeColoring> found;

    EdgeColorSearch(const Graph &g_, IndexKind kind_, int k_, uint64_t budget_, bool aut_trivial_)
        : g(g_), kind(kind_), k(k_), budget(budget_), aut_trivial(aut_trivial_) {
        order = oracle_edge_order(g);
        color.assign(g.num_edges(), kUncolored);
        cnt.assign(g.num_vertices(), std::vector<int>(k, 0));
        colored_deg.assign(g.num_vertices(), 0);
        if (kind_needs_distinguishing(kind) && !aut_trivial) {
            twins_at.assign(g.num_vertices(), {});
            for (auto pr : twin_pairs(g)) {
                twins_at[pr.first].push_back(pr);
                twins_at[pr.second].push_back(pr);
            }
        }
    }

    bool admissible(const Edge &e, int c) const {
        switch (kind) {
        case IndexKind::majority:
        case IndexKind::majority_distinguishing:
            return 2 * (cnt[e.u][c] + 1) <= g.degree(e.u) && 2 * (cnt[e.v][c] + 1) <= g.degree(e.v);
        case IndexKind::proper_distinguishing:
            return cnt[e.u][c] == 0 && cnt[e.v][c] == 0;
        case IndexKind::distinguishing:
            return true;
        }
        return true;
    }

    bool twin_pruned(int u) const {
        for (auto [a, b] : twins_at[u]) {
            if (colored_deg[a] != g.degree(a) || colored_deg[b] != g.degree(b)) continue;
            bool same = true;
            for (auto [w, id] : g.neighbors(a)) {
                if (w == b) continue;
                auto idb = g.edge_id(b, w);
                if (color[id] != color[*idb]) {
                    same = false;
                    break;
                }
            }
            if (same) return true;
        }
        return false;
    }

    bool leaf_ok() {
        if (!kind_needs_distinguishing(kind) || aut_trivial) return true;
        budget = budget > 64 ? budget - 64 : 0;
        EdgeColoring c(g, Palette::plain(k));
        c.colors = color;
        return !color_preserving_witness(g, c).has_value();
    }

    // depth-first over edges in fixed order; colors introduced in ascending
    // order breaks color permutation symmetry
    bool dfs(int pos, int max_used) {
        if (exhausted) return false;
        if (budget == 0) {
            exhausted = true;
            return false;
        }
        --budget;
        if (pos == (int)order.size()) {
            if (!leaf_ok()) return false;
            EdgeColoring c(g, Palette::plain(k));
            c.colors = color;
            found = std::move(c);
            return true;
        }
        int id = order[pos];
        const Edge &e = g.edge(id);
        int limit = std::min(k - 1, max_used + 1);
        for (int c = 0; c <= limit; ++c) {
            if (!admissible(e, c)) continue;
            color[id] = c;
            ++cnt[e.u][c];
            ++cnt[e.v][c];
            ++colored_deg[e.u];
            ++colored_deg[e.v];
            bool pruned = false;
            if (kind_needs_distinguishing(kind) && !aut_trivial)
                pruned = twin_pruned(e.u) || twin_pruned(e.v);
            if (!pruned && dfs(pos + 1, std::max(max_used, c))) return true;
            color[id] = kUncolored;
            --cnt[e.u][c];
            --cnt[e.v][c];
            --colored_deg[e.u];
            --colored_deg[e.v];
            if (exhausted) return false;
        }
        return false;
    }
};

} // namespace detail

// Smallest k <= k_max admitting a coloring of the requested kind, with a
// witness; exhaustive up to color-permutation symmetry, so the k is exact.
inline ExactResult exact_index(const Graph &g, IndexKind kind, int k_max,
                               uint64_t budget = 50'000'000) {
    ExactResult res;
    if (g.num_edges() == 0) return res;
    if (detail::kind_needs_majority(kind) && g.min_degree() < 2) return res;
    int k_lo = 1;
    if (detail::kind_needs_majority(kind)) {
        for (int v = 0; v < g.num_vertices(); ++v) {
            int d = g.degree(v);
            k_lo = std::max(k_lo, (d + d / 2 - 1) / (d / 2)); // ceil(d / floor(d/2))
        }
    }
    if (kind == IndexKind::proper_distinguishing) k_lo = std::max(k_lo, g.max_degree());
    bool aut_trivial = !detail::kind_needs_distinguishing(kind) || is_asymmetric(g);
    for (int k = k_lo; k <= k_max; ++k) {
        detail::EdgeColorSearch s(g, kind, k, budget, aut_trivial);
        if (s.dfs(0, -1)) {
            res.status = ExactStatus::found;
            res.k = k;
            res.witness = std::move(s.found);
            return res;
        }
        if (s.exhausted) {
            res.status = ExactStatus::budget_exhausted;
            return res;
        }
        budget = s.budget;
    }
    res.status = ExactStatus::infeasible_up_to_kmax;
    return res;
}

namespace detail {

struct ArcColorSearch {
    const Digraph &d;
    ArcIndexKind kind;
    int k;
    uint64_t budget;
    bool exhausted = false;
    bool aut_trivial;
    std::vector<int> order;
    std::vector<int> color;
    std::vector<std::vector<int>> in_cnt, out_cnt;
    std::optional<ArcColoring> found;

    ArcColorSearch(const Digraph &d_, ArcIndexKind kind_, int k_, uint64_t budget_, bool aut_trivial_)
        : d(d_), kind(kind_), k(k_), budget(budget_), aut_trivial(aut_trivial_) {
        order.resize(d.num_arcs());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            auto [au, av] = d.arc(a);
            auto [bu, bv] = d.arc(b);
            int da = d.out_degree(au) + d.in_degree(av), db = d.out_degree(bu) + d.in_degree(bv);
            if (da != db) return da > db;
            return a < b;
        });
        color.assign(d.num_arcs(), kUncolored);
        in_cnt.assign(d.num_vertices(), std::vector<int>(k, 0));
        out_cnt.assign(d.num_vertices(), std::vector<int>(k, 0));
    }

    bool leaf_ok() {
        if (kind != ArcIndexKind::arc_majority_distinguishing || aut_trivial) return true;
        budget = budget > 64 ? budget - 64 : 0;
        ArcColoring c(d, Palette::plain(k));
        c.colors = color;
        return !color_preserving_witness(d, c).has_value();
    }

    bool dfs(int pos, int max_used) {
        if (exhausted) return false;
        if (budget == 0) {
            exhausted = true;
            return false;
        }
        --budget;
        if (pos == (int)order.size()) {
            if (!leaf_ok()) return false;
            ArcColoring c(d, Palette::plain(k));
            c.colors = color;
            found = std::move(c);
            return true;
        }
        int id = order[pos];
        auto [u, v] = d.arc(id);
        int limit = std::min(k - 1, max_used + 1);
        for (int c = 0; c <= limit; ++c) {
            if (2 * (out_cnt[u][c] + 1) > d.out_degree(u)) continue;
            if (2 * (in_cnt[v][c] + 1) > d.in_degree(v)) continue;
            color[id] = c;
            ++out_cnt[u][c];
            ++in_cnt[v][c];
            if (dfs(pos + 1, std::max(max_used, c))) return true;
            color[id] = kUncolored;
            --out_cnt[u][c];
            --in_cnt[v][c];
            if (exhausted) return false;
        }
        return false;
    }
};

} // namespace detail

inline ExactArcResult exact_arc_index(const Digraph &d, ArcIndexKind kind, int k_max,
                                      uint64_t budget = 50'000'000) {
    ExactArcResult res;
    if (d.num_arcs() == 0) return res;
    for (int v = 0; v < d.num_vertices(); ++v)
        if (d.in_degree(v) < 2 || d.out_degree(v) < 2) return res; // majority infeasible
    int k_lo = 2;
    for (int v = 0; v < d.num_vertices(); ++v) {
        int din = d.in_degree(v), dout = d.out_degree(v);
        k_lo = std::max({k_lo, (din + din / 2 - 1) / (din / 2), (dout + dout / 2 - 1) / (dout / 2)});
    }
    bool aut_trivial = kind != ArcIndexKind::arc_majority_distinguishing ||
                       automorphism_group(d).is_trivial();
    for (int k = k_lo; k <= k_max; ++k) {
        detail::ArcColorSearch s(d, kind, k, budget, aut_trivial);
        if (s.dfs(0, -1)) {
            res.status = ExactStatus::found;
            res.k = k;
            res.witness = std::move(s.found);
            return res;
        }
        if (s.exhausted) {
            res.status = ExactStatus::budget_exhausted;
            return res;
        }
        budget = s.budget;
    }
    res.status = ExactStatus::infeasible_up_to_kmax;
    return res;
}

struct ConjectureReport {
    bool preconditions_met = false;    // min degree >= 2 and certified asymmetric spanning subgraph
    bool has_asymmetric_subgraph = false;
    ExactStatus status = ExactStatus::infeasible_up_to_kmax;
    int k = -1;
    bool consistent = false; // k <= 5 when the oracle resolved the instance
};

// Probes the 5-color conjecture on one instance; logs, never asserts.
inline ConjectureReport probe_conjecture(const Graph &g, uint64_t budget = 50'000'000,
                                         uint64_t seed = 1) {
    ConjectureReport rep;
    if (g.min_degree() < 2) return rep;
    auto sub = find_asymmetric_spanning_subgraph(g, 200, seed);
    rep.has_asymmetric_subgraph = sub.status == SearchStatus::found;
    if (!rep.has_asymmetric_subgraph) return rep;
    rep.preconditions_met = true;
    ExactResult r = exact_index(g, IndexKind::majority_distinguishing, 5, budget);
    rep.status = r.status;
    rep.k = r.k;
    rep.consistent = r.status == ExactStatus::found && r.k <= 5;
    return rep;
}

} // namespace majicolor
