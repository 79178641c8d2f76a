#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "majicolor/graph.hpp"

namespace majicolor {

enum class FamilyKind {
    complete,
    complete_bipartite,
    cycle,
    path,
    glued_cycle_edge,   // cycles sharing one common edge, traversal hub at that edge
    glued_cycle_vertex, // distinct even cycles sharing one vertex
    chord_path_cycle,   // even cycle with paths attached around it (two attachment patterns)
};

struct FamilySpec {
    FamilyKind kind;
    std::vector<int> parameters;
};

namespace detail {

// True iff the cyclic sequence admits no nontrivial rotation or reflection
// symmetry; used to validate that attached path lengths pin down the host
// cycle of the chord_path_cycle families.
inline bool cyclic_sequence_asymmetric(const std::vector<int> &seq) {
    int m = (int)seq.size();
    for (int t = 1; t < m; ++t) {
        bool fixed = true;
        for (int i = 0; i < m && fixed; ++i) fixed = seq[(i + t) % m] == seq[i];
        if (fixed) return false;
    }
    for (int c = 0; c < m; ++c) {
        bool fixed = true;
        for (int i = 0; i < m && fixed; ++i) fixed = seq[((c - i - 1) % m + m) % m] == seq[i];
        if (fixed) return false;
    }
    return true;
}

// Appends a u-v path of the given length, creating length-1 internal vertices.
inline void add_path(std::vector<std::pair<int, int>> &edges, int &next_vertex, int u, int v, int length) {
    int prev = u;
    for (int j = 1; j < length; ++j) {
        edges.push_back({prev, next_vertex});
        prev = next_vertex++;
    }
    edges.push_back({prev, v});
}

} // namespace detail

inline Graph generate(const FamilySpec &spec) {
    const auto &p = spec.parameters;
    switch (spec.kind) {
    case FamilyKind::complete: {
        if (p.size() != 1 || p[0] < 1) throw InvalidFamilyParameters("complete: need n >= 1");
        int n = p[0];
        std::vector<std::pair<int, int>> es;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) es.push_back({i, j});
        return Graph::from_pairs(n, es);
    }
    case FamilyKind::complete_bipartite: {
        if (p.size() != 2 || p[0] < 1 || p[1] < 1)
            throw InvalidFamilyParameters("complete_bipartite: need a,b >= 1");
        int a = p[0], b = p[1];
        std::vector<std::pair<int, int>> es;
        for (int i = 0; i < a; ++i)
            for (int j = 0; j < b; ++j) es.push_back({i, a + j});
        return Graph::from_pairs(a + b, es);
    }
    case FamilyKind::cycle: {
        if (p.size() != 1 || p[0] < 3) throw InvalidFamilyParameters("cycle: need n >= 3");
        int n = p[0];
        std::vector<std::pair<int, int>> es;
        for (int i = 0; i < n; ++i) es.push_back({i, (i + 1) % n});
        return Graph::from_pairs(n, es);
    }
    case FamilyKind::path: {
        if (p.size() != 1 || p[0] < 1) throw InvalidFamilyParameters("path: need n >= 1");
        int n = p[0];
        std::vector<std::pair<int, int>> es;
        for (int i = 0; i + 1 < n; ++i) es.push_back({i, i + 1});
        return Graph::from_pairs(n, es);
    }
    case FamilyKind::glued_cycle_edge: {
        // One cycle per parameter, all sharing the edge {0,1}; the shared edge
        // is subdivided when the number of odd-length cycles is odd.
        if (p.size() < 3 || p.size() % 2 == 0)
            throw InvalidFamilyParameters("glued_cycle_edge: need an odd number >= 3 of cycle lengths");
        int odd_count = 0, even_count2 = 0;
        for (size_t i = 0; i < p.size(); ++i) {
            if (p[i] < 3) throw InvalidFamilyParameters("glued_cycle_edge: cycle length < 3");
            int reps = (int)std::count(p.begin(), p.end(), p[i]);
            if (p[i] % 2 == 1 && reps > 1)
                throw InvalidFamilyParameters("glued_cycle_edge: odd cycle lengths may not repeat");
            if (p[i] % 2 == 0 && reps > 2)
                throw InvalidFamilyParameters("glued_cycle_edge: even cycle lengths may appear at most twice");
            if (p[i] % 2 == 1) ++odd_count;
            else ++even_count2;
        }
        (void)even_count2;
        std::vector<std::pair<int, int>> es;
        int next = 2;
        for (int len : p) detail::add_path(es, next, 0, 1, len - 1);
        if (odd_count % 2 == 1) {
            es.push_back({0, next});
            es.push_back({next, 1});
            ++next;
        } else {
            es.push_back({0, 1});
        }
        return Graph::from_pairs(next, es);
    }
    case FamilyKind::glued_cycle_vertex: {
        // Distinct even cycles glued at vertex 0.
        if (p.empty()) throw InvalidFamilyParameters("glued_cycle_vertex: need cycle lengths");
        for (size_t i = 0; i < p.size(); ++i) {
            if (p[i] < 4 || p[i] % 2 != 0)
                throw InvalidFamilyParameters("glued_cycle_vertex: lengths must be even and >= 4");
            if (std::count(p.begin(), p.end(), p[i]) > 1)
                throw InvalidFamilyParameters("glued_cycle_vertex: lengths must be distinct");
        }
        std::vector<std::pair<int, int>> es;
        int next = 1;
        for (int len : p) detail::add_path(es, next, 0, 0, len);
        return Graph::from_pairs(next, es);
    }
    case FamilyKind::chord_path_cycle: {
        // parameters: [2k, l_1, ..., l_m]. m == 2k attaches a path of length
        // l_i between consecutive cycle vertices v_i, v_{i+1}; m == k attaches
        // the i-th path between v_{2i} and v_{2i+2}.
        if (p.size() < 2) throw InvalidFamilyParameters("chord_path_cycle: need cycle length + path lengths");
        int c = p[0];
        if (c < 4 || c % 2 != 0) throw InvalidFamilyParameters("chord_path_cycle: cycle length must be even >= 4");
        std::vector<int> ls(p.begin() + 1, p.end());
        int m = (int)ls.size();
        bool dense = m == c, sparse = m == c / 2;
        if (!dense && !sparse)
            throw InvalidFamilyParameters("chord_path_cycle: need exactly 2k or k path lengths");
        long sum = std::accumulate(ls.begin(), ls.end(), 0L);
        if (sum % 2 != 0) throw InvalidFamilyParameters("chord_path_cycle: path lengths must sum to even");
        for (int l : ls) {
            if (dense && l < 2) throw InvalidFamilyParameters("chord_path_cycle: path length < 2");
            if (sparse && (l < 1 || l == 2))
                throw InvalidFamilyParameters("chord_path_cycle: sparse path length must be 1 or >= 3");
        }
        if (!detail::cyclic_sequence_asymmetric(ls))
            throw InvalidFamilyParameters("chord_path_cycle: length sequence has a cyclic symmetry");
        std::vector<std::pair<int, int>> es;
        for (int i = 0; i < c; ++i) es.push_back({i, (i + 1) % c});
        int next = c;
        for (int i = 0; i < m; ++i) {
            if (dense) detail::add_path(es, next, i, (i + 1) % c, ls[i]);
            else detail::add_path(es, next, (2 * i) % c, (2 * i + 2) % c, ls[i]);
        }
        return Graph::from_pairs(next, es);
    }
    }
    throw Error("unreachable");
}

} // namespace majicolor
