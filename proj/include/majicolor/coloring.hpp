#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "majicolor/graph.hpp"

namespace majicolor {

// Colors are small non-negative integers indexing a palette. The main-theorem
// palette Z = {0, 0', 1, ..., ceil(sqrt(D))+3} maps "0" to index 0, "0'" to
// index 1 and numeral k to index k+1; plain palettes name color i as i+1.
struct Palette {
    std::vector<std::string> names;

    static Palette plain(int k) {
        Palette p;
        for (int i = 0; i < k; ++i) p.names.push_back(std::to_string(i + 1));
        return p;
    }
    // 0, 0', 1, 2, ..., extra
    static Palette z_palette(int extra) {
        Palette p;
        p.names.push_back("0");
        p.names.push_back("0'");
        for (int i = 1; i <= extra; ++i) p.names.push_back(std::to_string(i));
        return p;
    }
    int size() const { return (int)names.size(); }
};

constexpr int kUncolored = -1;

struct EdgeColoring {
    std::vector<int> colors; // indexed by edge id; kUncolored marks gaps
    Palette palette;

    EdgeColoring() = default;
    EdgeColoring(const Graph &g, Palette p) : colors(g.num_edges(), kUncolored), palette(std::move(p)) {}

    bool total() const {
        for (int c : colors)
            if (c == kUncolored) return false;
        return true;
    }
    int colors_used() const {
        std::set<int> s;
        for (int c : colors)
            if (c != kUncolored) s.insert(c);
        return (int)s.size();
    }
    // Per-vertex tally d^alpha(v) over colored edges.
    std::vector<std::map<int, int>> tallies(const Graph &g) const {
        std::vector<std::map<int, int>> t(g.num_vertices());
        for (int id = 0; id < (int)colors.size(); ++id) {
            if (colors[id] == kUncolored) continue;
            ++t[g.edge(id).u][colors[id]];
            ++t[g.edge(id).v][colors[id]];
        }
        return t;
    }
};

struct ArcColoring {
    std::vector<int> colors; // indexed by arc id
    Palette palette;

    ArcColoring() = default;
    ArcColoring(const Digraph &d, Palette p) : colors(d.num_arcs(), kUncolored), palette(std::move(p)) {}

    bool total() const {
        for (int c : colors)
            if (c == kUncolored) return false;
        return true;
    }
    int colors_used() const {
        std::set<int> s;
        for (int c : colors)
            if (c != kUncolored) s.insert(c);
        return (int)s.size();
    }
};

// Remaps colors so that palette indices are disjoint: coloring b is shifted
// by the size of palette a. Both inputs keep their own palettes' names.
inline EdgeColoring merge_disjoint(const Graph &g, const EdgeColoring &a, const EdgeColoring &b) {
    Palette merged = a.palette;
    for (const auto &nm : b.palette.names) merged.names.push_back(nm);
    EdgeColoring out(g, merged);
    int shift = a.palette.size();
    for (int id = 0; id < g.num_edges(); ++id) {
        if (a.colors[id] != kUncolored && b.colors[id] != kUncolored)
            throw PaletteOverlap("edge colored on both sides of a merge");
        if (a.colors[id] != kUncolored) out.colors[id] = a.colors[id];
        else if (b.colors[id] != kUncolored) out.colors[id] = b.colors[id] + shift;
    }
    return out;
}

} // namespace majicolor
