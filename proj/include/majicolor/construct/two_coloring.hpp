#pragma once

#include <optional>

#include "majicolor/coloring.hpp"
#include "majicolor/graph.hpp"
#include "majicolor/verify.hpp"

namespace majicolor::construct {

struct TwoColoringSpec {
    std::optional<int> special_vertex;
    std::vector<int> forbidden_special;
};

struct TwoColoringResult {
    EdgeColoring coloring;
    bool case_two = false;          // all degrees even and |E| odd
    std::optional<int> special_vertex; // realized special vertex in case (ii)
};

namespace detail {

// Hierholzer circuit over an explicit adjacency with edge ids; returns the
// edge ids in traversal order. All degrees must be even and the edge set
// connected.
inline std::vector<int> euler_circuit(int n, const std::vector<std::vector<std::pair<int, int>>> &adj,
                                      int total_edges, int start) {
    std::vector<size_t> next(n, 0);
    std::vector<char> used(total_edges, 0);
    std::vector<int> stack_v{start}, stack_e{-1};
    std::vector<int> circuit;
    while (!stack_v.empty()) {
        int v = stack_v.back();
        bool advanced = false;
        while (next[v] < adj[v].size()) {
            auto [w, id] = adj[v][next[v]++];
            if (used[id]) continue;
            used[id] = 1;
            stack_v.push_back(w);
            stack_e.push_back(id);
            advanced = true;
            break;
        }
        if (!advanced) {
            if (stack_e.back() >= 0) circuit.push_back(stack_e.back());
            stack_v.pop_back();
            stack_e.pop_back();
        }
    }
    std::reverse(circuit.begin(), circuit.end());
    return circuit;
}

inline bool edges_connected(const Graph &g) {
    if (g.num_edges() == 0) return false;
    std::vector<char> seen(g.num_vertices(), 0);
    std::vector<int> stack{g.edge(0).u};
    seen[g.edge(0).u] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (auto [w, id] : g.neighbors(v)) {
            (void)id;
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
        }
    }
    for (int v = 0; v < g.num_vertices(); ++v)
        if (g.degree(v) > 0 && !seen[v]) return false;
    return true;
}

} // namespace detail

// Balanced edge 2-coloring via Euler-circuit alternation. Case (i) (even
// |E| or an odd-degree vertex present): every vertex sees each color at most
// ceil(d/2) times; an auxiliary vertex joined to all odd-degree vertices
// absorbs the alternation break. Case (ii) (all degrees even, |E| odd): the
// circuit starts at the special vertex, which alone gets d/2+1 of one color.
inline TwoColoringResult two_coloring_balanced(const Graph &g, const TwoColoringSpec &spec = {}) {
    if (g.num_edges() == 0) throw EmptyGraph("two_coloring_balanced needs at least one edge");
    if (!detail::edges_connected(g)) throw Error("edge set must be connected");
    int n = g.num_vertices();
    std::vector<int> odd;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) % 2 == 1) odd.push_back(v);

    TwoColoringResult res;
    res.coloring = EdgeColoring(g, Palette::plain(2));
    res.case_two = odd.empty() && g.num_edges() % 2 == 1;

    int aux = -1, start;
    std::vector<std::vector<std::pair<int, int>>> adj(n + 1);
    for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v);
    int total = g.num_edges();
    if (!odd.empty()) {
        aux = n;
        for (int v : odd) {
            adj[aux].push_back({v, total});
            adj[v].push_back({aux, total});
            ++total;
        }
        start = aux;
    } else if (res.case_two) {
        int u = -1;
        if (spec.special_vertex) {
            u = *spec.special_vertex;
        } else {
            for (int v = 0; v < n && u < 0; ++v) {
                if (g.degree(v) == 0) continue;
                bool forb = std::find(spec.forbidden_special.begin(), spec.forbidden_special.end(),
                                      v) != spec.forbidden_special.end();
                if (!forb) u = v;
            }
            if (u < 0) throw Error("no admissible special vertex");
        }
        res.special_vertex = u;
        start = u;
    } else {
        start = g.edge(0).u;
    }

    auto circuit = detail::euler_circuit(n + 1, adj, total, start);
    for (size_t i = 0; i < circuit.size(); ++i)
        if (circuit[i] < g.num_edges()) res.coloring.colors[circuit[i]] = (int)(i % 2);
    return res;
}

// Almost majority coloring with at most 4 colors: one balanced 2-coloring,
// then a balanced 2-coloring inside each color class. When all non-leaf
// degrees are even (and the Euler parity cooperates) a single 2-coloring
// already suffices; odd cycles get the direct 3-color pattern.
inline EdgeColoring almost_majority_4(const Graph &g) {
    if (g.num_edges() == 0) throw EmptyGraph("almost_majority_4 needs at least one edge");
    if (!detail::edges_connected(g)) throw Error("edge set must be connected");
    int n = g.num_vertices();

    bool nonleaf_even = true, has_leaf = false;
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) == 1) has_leaf = true;
        else if (g.degree(v) % 2 == 1) nonleaf_even = false;
    }
    if (nonleaf_even && (g.num_edges() % 2 == 0 || has_leaf)) {
        auto res = two_coloring_balanced(g);
        auto rep = verify_majority(g, res.coloring, MajorityMode::almost);
        if (rep.pass) return res.coloring;
    }

    // odd cycle: alternate 1,2 and close with color 3
    {
        bool cycle = g.num_edges() == n && !has_leaf;
        for (int v = 0; v < n && cycle; ++v) cycle = g.degree(v) == 2;
        if (cycle && n % 2 == 1) {
            EdgeColoring c(g, Palette::plain(3));
            std::vector<std::vector<std::pair<int, int>>> adj(n + 1);
            for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v);
            auto circuit = detail::euler_circuit(n + 1, adj, g.num_edges(), g.edge(0).u);
            for (size_t i = 0; i < circuit.size(); ++i)
                c.colors[circuit[i]] = i + 1 == circuit.size() ? 2 : (int)(i % 2);
            auto rep = verify_majority(g, c, MajorityMode::strict);
            if (!rep.pass) throw VerifierRejected("odd cycle pattern failed");
            return c;
        }
    }

    auto level1 = [&](const Graph &h, const std::vector<int> &forb) {
        TwoColoringSpec spec;
        spec.forbidden_special = forb;
        // place a would-be special where the final excess hurts least
        bool odd_vertex = false;
        for (int v = 0; v < h.num_vertices(); ++v)
            if (h.degree(v) % 2 == 1) odd_vertex = true;
        if (!odd_vertex && h.num_edges() % 2 == 1) {
            int best = -1, best_slack = -1 << 30;
            for (int v = 0; v < h.num_vertices(); ++v) {
                if (h.degree(v) == 0) continue;
                if (std::find(forb.begin(), forb.end(), v) != forb.end()) continue;
                int slack = g.degree(v) / 2 - (h.degree(v) / 2 + 1);
                if (slack > best_slack) {
                    best_slack = slack;
                    best = v;
                }
            }
            if (best >= 0) spec.special_vertex = best;
        }
        return two_coloring_balanced(h, spec);
    };

    auto run = [&](int attempt) -> EdgeColoring {
        (void)attempt;
        EdgeColoring out(g, Palette::plain(4));
        auto lvl1 = level1(g, {});
        std::vector<int> forb_next;
        if (lvl1.special_vertex) forb_next.push_back(*lvl1.special_vertex);
        for (int cls = 0; cls < 2; ++cls) {
            std::vector<int> ids;
            for (int id = 0; id < g.num_edges(); ++id)
                if (lvl1.coloring.colors[id] == cls) ids.push_back(id);
            if (ids.empty()) continue;
            Graph h = edge_subgraph(g, ids);
            // connected components of the class subgraph, two-colored separately
            std::vector<char> done(g.num_vertices(), 0);
            for (int s = 0; s < g.num_vertices(); ++s) {
                if (done[s] || h.degree(s) == 0) continue;
                std::vector<int> comp{s};
                done[s] = 1;
                for (size_t i = 0; i < comp.size(); ++i)
                    for (auto [w, id] : h.neighbors(comp[i])) {
                        (void)id;
                        if (!done[w]) {
                            done[w] = 1;
                            comp.push_back(w);
                        }
                    }
                std::vector<int> comp_ids;
                for (int id = 0; id < h.num_edges(); ++id)
                    if (std::find(comp.begin(), comp.end(), h.edge(id).u) != comp.end())
                        comp_ids.push_back(id);
                Graph hc = edge_subgraph(h, comp_ids);
                auto lvl2 = level1(hc, forb_next);
                for (int id2 = 0; id2 < hc.num_edges(); ++id2) {
                    const Edge &e = hc.edge(id2);
                    out.colors[*g.edge_id(e.u, e.v)] = 2 * cls + lvl2.coloring.colors[id2];
                }
            }
        }
        return out;
    };

    EdgeColoring out = run(0);
    auto rep = verify_majority(g, out, MajorityMode::almost);
    if (rep.pass) return out;

    // repair pass: recolor one offending edge toward a color under caps
    for (int round = 0; round < 4 * g.num_edges() && !rep.pass; ++round) {
        auto viol = rep.violations.front();
        bool swapped = false;
        for (auto [w, id] : g.neighbors(viol.vertex)) {
            if (out.colors[id] != viol.color) continue;
            auto tal = out.tallies(g);
            for (int c = 0; c < 4 && !swapped; ++c) {
                if (c == viol.color) continue;
                int cv = tal[viol.vertex].count(c) ? tal[viol.vertex][c] : 0;
                int cw = tal[w].count(c) ? tal[w][c] : 0;
                bool ok_v = 2 * (cv + 1) <= g.degree(viol.vertex);
                bool ok_w = g.degree(w) <= 1 || 2 * (cw + 1) <= g.degree(w);
                if (ok_v && ok_w) {
                    out.colors[id] = c;
                    swapped = true;
                }
            }
            if (swapped) break;
        }
        if (!swapped) break;
        rep = verify_majority(g, out, MajorityMode::almost);
    }
    if (!rep.pass) throw VerifierRejected("almost majority 4-coloring failed verification");
    return out;
}

enum class EulerOrderRule { plain, shortest_cycle_first };

namespace detail {

// Recognizes the two glued shapes: distinct even cycles at one hub vertex, or
// internally disjoint u-v paths sharing the central edge (possibly
// subdivided). Returns the circuit edge order honoring shortest-cycle-first,
// or nothing when the shape does not match.
inline std::optional<std::vector<int>> glued_circuit(const Graph &g) {
    int n = g.num_vertices();
    std::vector<int> high;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) > 2) high.push_back(v);
    auto walk_path = [&](int from, int first, std::vector<char> &used_edge) {
        // follow degree-2 chain until a high-degree vertex is reached
        std::vector<int> edges;
        int prev = from, cur = first;
        edges.push_back(*g.edge_id(prev, cur));
        used_edge[edges.back()] = 1;
        while (g.degree(cur) == 2) {
            for (auto [w, id] : g.neighbors(cur)) {
                if (used_edge[id]) continue;
                used_edge[id] = 1;
                edges.push_back(id);
                prev = cur;
                cur = w;
                break;
            }
        }
        return std::pair{cur, edges};
    };
    if (high.size() == 1) {
        // vertex-glued cycles
        int hub = high[0];
        std::vector<char> used(g.num_edges(), 0);
        std::vector<std::vector<int>> cycles;
        for (auto [w, id] : g.neighbors(hub)) {
            if (used[id]) continue;
            auto [end, edges] = walk_path(hub, w, used);
            if (end != hub) return std::nullopt;
            cycles.push_back(edges);
        }
        std::sort(cycles.begin(), cycles.end(),
                  [](const auto &a, const auto &b) { return a.size() < b.size(); });
        std::vector<int> order;
        for (auto &c : cycles) order.insert(order.end(), c.begin(), c.end());
        return order;
    }
    if (high.size() == 2) {
        // edge-glued cycles: paths between the two hubs; the central path is
        // the direct edge, or the shortest two-edge path added last
        int u = high[0], v = high[1];
        std::vector<char> used(g.num_edges(), 0);
        struct PathInfo {
            std::vector<int> edges;
            int start;
        };
        std::vector<PathInfo> paths;
        for (auto [w, id] : g.neighbors(u)) {
            if (used[id]) continue;
            if (w == v) {
                used[id] = 1;
                paths.push_back({{id}, u});
                continue;
            }
            auto [end, edges] = walk_path(u, w, used);
            if (end != v) return std::nullopt;
            paths.push_back({edges, u});
        }
        if (paths.size() < 2) return std::nullopt;
        // pick the central path: length 1 if present, else the length-2 path
        // whose interior vertex has the largest index
        int central = -1;
        for (int i = 0; i < (int)paths.size(); ++i)
            if (paths[i].edges.size() == 1) central = i;
        if (central < 0) {
            int best_interior = -1;
            for (int i = 0; i < (int)paths.size(); ++i) {
                if (paths[i].edges.size() != 2) continue;
                const Edge &first = g.edge(paths[i].edges[0]);
                int interior = first.u == u ? first.v : first.u;
                if (interior > best_interior) {
                    best_interior = interior;
                    central = i;
                }
            }
        }
        if (central < 0) return std::nullopt;
        std::vector<int> rest;
        for (int i = 0; i < (int)paths.size(); ++i)
            if (i != central) rest.push_back(i);
        std::sort(rest.begin(), rest.end(), [&](int a, int b) {
            return paths[a].edges.size() < paths[b].edges.size();
        });
        // traverse u->v, v->u, ... in increasing length, closing with the
        // central path
        std::vector<int> order;
        bool forward = true;
        for (int i : rest) {
            auto edges = paths[i].edges;
            if (!forward) std::reverse(edges.begin(), edges.end());
            order.insert(order.end(), edges.begin(), edges.end());
            forward = !forward;
        }
        auto edges = paths[central].edges;
        if (!forward) std::reverse(edges.begin(), edges.end()); // close from v back to u
        order.insert(order.end(), edges.begin(), edges.end());
        return order;
    }
    return std::nullopt;
}

} // namespace detail

// Alternating 2-coloring along an Euler circuit; for the glued-cycle families
// the circuit runs through the cycles shortest first so that equal-length
// cycles pick up different phases.
inline EdgeColoring eulerian_2coloring(const Graph &g, EulerOrderRule rule = EulerOrderRule::plain) {
    if (g.num_edges() == 0) throw EmptyGraph("eulerian_2coloring needs edges");
    if (!detail::edges_connected(g)) throw NotEulerian("graph is not connected");
    for (int v = 0; v < g.num_vertices(); ++v)
        if (g.degree(v) % 2 != 0) throw NotEulerian("odd-degree vertex");
    if (g.num_edges() % 2 != 0) throw OddEdgeCount("alternation needs an even number of edges");

    std::vector<int> circuit;
    if (rule == EulerOrderRule::shortest_cycle_first) {
        if (auto ord = detail::glued_circuit(g)) circuit = *ord;
    }
    if (circuit.empty()) {
        std::vector<std::vector<std::pair<int, int>>> adj(g.num_vertices() + 1);
        for (int v = 0; v < g.num_vertices(); ++v) adj[v] = g.neighbors(v);
        circuit = detail::euler_circuit(g.num_vertices() + 1, adj, g.num_edges(), g.edge(0).u);
    }
    EdgeColoring c(g, Palette::plain(2));
    for (size_t i = 0; i < circuit.size(); ++i) c.colors[circuit[i]] = (int)(i % 2);
    auto rep = verify_majority(g, c, MajorityMode::strict);
    if (!rep.pass) throw VerifierRejected("alternation did not yield a majority coloring");
    return c;
}

} // namespace majicolor::construct
