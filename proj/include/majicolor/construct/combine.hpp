#pragma once

#include "majicolor/construct/two_coloring.hpp"
#include "majicolor/search.hpp"
#include "majicolor/verify.hpp"

namespace majicolor::construct {

// Union of an a-coloring of a connected spanning subgraph h (palette A) with
// a weak-majority b-coloring of g-h (palette B, disjoint names). The counting
// hypothesis 2*d^alpha_h(v) <= d_g(v) is checked, never assumed; the output
// is certified strict-majority on g.
inline EdgeColoring combine_majority(const Graph &g, const Graph &h, const EdgeColoring &c_h,
                                     const EdgeColoring &c_rest) {
    if (h.num_vertices() != g.num_vertices()) throw NotASubgraph("h must span g");
    for (const Edge &e : h.edges())
        if (!g.has_edge(e.u, e.v)) throw NotASubgraph("h has an edge outside g");
    if (!is_connected(h)) throw Error("h must be connected");
    if (!c_h.total() || !c_rest.total()) throw IncompleteColoring("both colorings must be total");
    for (const auto &name : c_h.palette.names)
        for (const auto &other : c_rest.palette.names)
            if (name == other) throw PaletteOverlap("palettes share color '" + name + "'");

    auto tall_h = c_h.tallies(h);
    for (int v = 0; v < g.num_vertices(); ++v)
        for (auto [color, count] : tall_h[v])
            if (2 * count > g.degree(v)) throw HypothesisViolated(v, color);

    Graph rest = graph_minus(g, h);
    auto weak = verify_majority(rest, c_rest, MajorityMode::weak);
    if (!weak.pass)
        throw HypothesisViolated(weak.violations[0].vertex,
                                 c_h.palette.size() + weak.violations[0].color);

    Palette merged = c_h.palette;
    for (const auto &nm : c_rest.palette.names) merged.names.push_back(nm);
    EdgeColoring out(g, merged);
    for (int id = 0; id < h.num_edges(); ++id) {
        const Edge &e = h.edge(id);
        out.colors[*g.edge_id(e.u, e.v)] = c_h.colors[id];
    }
    for (int id = 0; id < rest.num_edges(); ++id) {
        const Edge &e = rest.edge(id);
        out.colors[*g.edge_id(e.u, e.v)] = c_rest.colors[id] + c_h.palette.size();
    }
    auto rep = verify_majority(g, out, MajorityMode::strict);
    if (!rep.pass) throw VerifierRejected("combined coloring is not majority");
    return out;
}

namespace detail {

// Balanced 2-coloring of every component of `rest` (palette {a,b} as indices
// 0/1), placing case (ii) special vertices where the host graph keeps strict
// majority (some edge outside `rest`, i.e. d_rest(v) + 2 <= d_host(v)); when
// impossible, one excess edge at the special is bumped to color index 2.
inline EdgeColoring rest_two_coloring(const Graph &host, const Graph &rest,
                                      const std::vector<int> &avoid_special, bool &used_third) {
    used_third = false;
    EdgeColoring out(rest, Palette::plain(3));
    std::vector<char> done(rest.num_vertices(), 0);
    for (int s = 0; s < rest.num_vertices(); ++s) {
        if (done[s] || rest.degree(s) == 0) continue;
        std::vector<int> comp{s};
        done[s] = 1;
        for (size_t i = 0; i < comp.size(); ++i)
            for (auto [w, id] : rest.neighbors(comp[i])) {
                (void)id;
                if (!done[w]) {
                    done[w] = 1;
                    comp.push_back(w);
                }
            }
        std::vector<int> ids;
        for (int id = 0; id < rest.num_edges(); ++id)
            if (std::find(comp.begin(), comp.end(), rest.edge(id).u) != comp.end()) ids.push_back(id);
        Graph sub = edge_subgraph(rest, ids);

        TwoColoringSpec spec;
        spec.forbidden_special = avoid_special;
        bool all_even = true;
        for (int v : comp) all_even = all_even && sub.degree(v) % 2 == 0;
        if (all_even && ids.size() % 2 == 1) {
            int best = -1;
            for (int v : comp) {
                if (std::find(avoid_special.begin(), avoid_special.end(), v) != avoid_special.end())
                    continue;
                if (sub.degree(v) + 2 <= host.degree(v)) {
                    best = v;
                    break;
                }
            }
            if (best >= 0) spec.special_vertex = best;
        }
        auto two = two_coloring_balanced(sub, spec);
        for (int id2 = 0; id2 < sub.num_edges(); ++id2) {
            const Edge &e = sub.edge(id2);
            out.colors[*rest.edge_id(e.u, e.v)] = two.coloring.colors[id2];
        }
        if (two.special_vertex && sub.degree(*two.special_vertex) + 2 > host.degree(*two.special_vertex)) {
            // no slack at the special: repaint one of its excess edges
            int u = *two.special_vertex;
            auto tal = out.tallies(rest);
            int heavy = tal[u][0] > tal[u][1] ? 0 : 1;
            for (auto [w, id] : rest.neighbors(u)) {
                (void)w;
                if (out.colors[id] == heavy) {
                    out.colors[id] = 2;
                    used_third = true;
                    break;
                }
            }
        }
    }
    return out;
}

} // namespace detail

// Majority distinguishing coloring with at most 7 colors for graphs with a
// connected asymmetric spanning subgraph: almost-majority-4 on the certified
// subgraph plus a balanced completion on a disjoint palette (2 extra colors
// when the special vertices cooperate, 3 otherwise).
inline EdgeColoring color_via_asymmetric_subgraph(const Graph &g, int attempts = 200,
                                                  uint64_t seed = 1) {
    if (g.min_degree() < 2) throw MinDegreeTooSmall("needs minimum degree 2");
    auto found = find_asymmetric_spanning_subgraph(g, attempts, seed);
    if (found.status != SearchStatus::found)
        throw NoAsymmetricSubgraphFound("no certified asymmetric spanning subgraph");
    const Graph &h = *found.value;

    EdgeColoring c_h = almost_majority_4(h);
    Graph rest = graph_minus(g, h);
    EdgeColoring out(g, Palette::plain(7));
    for (int id = 0; id < h.num_edges(); ++id)
        out.colors[*g.edge_id(h.edge(id).u, h.edge(id).v)] = c_h.colors[id];
    if (rest.num_edges() > 0) {
        bool used_third = false;
        EdgeColoring c_rest = detail::rest_two_coloring(g, rest, {}, used_third);
        for (int id = 0; id < rest.num_edges(); ++id)
            out.colors[*g.edge_id(rest.edge(id).u, rest.edge(id).v)] = 4 + c_rest.colors[id];
    }
    auto rep = verify_majority_distinguishing(g, out);
    if (!rep.pass) throw VerifierRejected("asymmetric-subgraph coloring failed certification");
    if (out.colors_used() > 7) throw VerifierRejected("used more than 7 colors");
    return out;
}

} // namespace majicolor::construct
