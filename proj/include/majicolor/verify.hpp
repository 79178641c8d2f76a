#pragma once

#include <optional>
#include <string>

#include "majicolor/automorphism.hpp"
#include "majicolor/coloring.hpp"
#include "majicolor/graph.hpp"

namespace majicolor {

enum class MajorityMode { strict, weak, almost };

enum class IndexKind { majority, distinguishing, majority_distinguishing, proper_distinguishing };

enum class VerifyMode {
    majority_strict,
    majority_weak,
    majority_almost,
    distinguishing,
    majority_distinguishing,
    arc_majority,
};

struct Violation {
    int vertex;
    int color; // -1 when not color-specific
    int count;
    int threshold;
};

struct VerificationReport {
    bool pass = true;
    VerifyMode mode = VerifyMode::majority_strict;
    int colors_used = 0;
    std::vector<Violation> violations;              // every breach, never fail-fast
    std::optional<Permutation> witness_automorphism; // non-identity map on distinguishing fail
};

// "at most half" as the exact integer inequality 2*count <= degree
inline VerificationReport verify_majority(const Graph &g, const EdgeColoring &c, MajorityMode mode) {
    if (!c.total()) throw IncompleteColoring("coloring must be total");
    VerificationReport rep;
    rep.mode = mode == MajorityMode::strict   ? VerifyMode::majority_strict
               : mode == MajorityMode::weak   ? VerifyMode::majority_weak
                                              : VerifyMode::majority_almost;
    rep.colors_used = c.colors_used();
    auto tallies = c.tallies(g);
    for (int v = 0; v < g.num_vertices(); ++v) {
        int d = g.degree(v);
        if (mode == MajorityMode::almost && d <= 1) continue;
        int threshold = mode == MajorityMode::weak ? (d + 1) / 2 : d / 2;
        for (auto [color, count] : tallies[v]) {
            bool ok = mode == MajorityMode::weak ? count <= threshold : 2 * count <= d;
            if (!ok) rep.violations.push_back({v, color, count, threshold});
        }
    }
    rep.pass = rep.violations.empty();
    return rep;
}

inline VerificationReport verify_distinguishing(const Graph &g, const EdgeColoring &c) {
    if (!c.total()) throw IncompleteColoring("coloring must be total");
    VerificationReport rep;
    rep.mode = VerifyMode::distinguishing;
    rep.colors_used = c.colors_used();
    rep.witness_automorphism = color_preserving_witness(g, c);
    rep.pass = !rep.witness_automorphism.has_value();
    return rep;
}

inline VerificationReport verify_majority_distinguishing(const Graph &g, const EdgeColoring &c) {
    VerificationReport maj = verify_majority(g, c, MajorityMode::strict);
    VerificationReport dis = verify_distinguishing(g, c);
    VerificationReport rep;
    rep.mode = VerifyMode::majority_distinguishing;
    rep.colors_used = maj.colors_used;
    rep.violations = maj.violations;
    rep.witness_automorphism = dis.witness_automorphism;
    rep.pass = maj.pass && dis.pass;
    return rep;
}

inline VerificationReport verify_arc_majority(const Digraph &d, const ArcColoring &c) {
    if (!c.total()) throw IncompleteColoring("arc coloring must be total");
    VerificationReport rep;
    rep.mode = VerifyMode::arc_majority;
    rep.colors_used = c.colors_used();
    std::vector<std::map<int, int>> in_tally(d.num_vertices()), out_tally(d.num_vertices());
    for (int id = 0; id < d.num_arcs(); ++id) {
        auto [u, v] = d.arc(id);
        ++out_tally[u][c.colors[id]];
        ++in_tally[v][c.colors[id]];
    }
    for (int v = 0; v < d.num_vertices(); ++v) {
        for (auto [color, count] : out_tally[v])
            if (2 * count > d.out_degree(v))
                rep.violations.push_back({v, color, count, d.out_degree(v) / 2});
        for (auto [color, count] : in_tally[v])
            if (2 * count > d.in_degree(v))
                rep.violations.push_back({v, color, count, d.in_degree(v) / 2});
    }
    rep.pass = rep.violations.empty();
    return rep;
}

// Arc coloring that is both arc-majority and distinguishing on the digraph.
inline VerificationReport verify_arc_majority_distinguishing(const Digraph &d, const ArcColoring &c) {
    VerificationReport rep = verify_arc_majority(d, c);
    rep.mode = VerifyMode::majority_distinguishing;
    rep.witness_automorphism = color_preserving_witness(d, c);
    rep.pass = rep.pass && !rep.witness_automorphism.has_value();
    return rep;
}

inline VerificationReport verify_proper(const Graph &g, const EdgeColoring &c) {
    if (!c.total()) throw IncompleteColoring("coloring must be total");
    VerificationReport rep;
    rep.mode = VerifyMode::majority_strict;
    rep.colors_used = c.colors_used();
    auto tallies = c.tallies(g);
    for (int v = 0; v < g.num_vertices(); ++v)
        for (auto [color, count] : tallies[v])
            if (count > 1) rep.violations.push_back({v, color, count, 1});
    rep.pass = rep.violations.empty();
    return rep;
}

inline const char *verify_mode_name(VerifyMode m) {
    switch (m) {
    case VerifyMode::majority_strict: return "majority_strict";
    case VerifyMode::majority_weak: return "majority_weak";
    case VerifyMode::majority_almost: return "majority_almost";
    case VerifyMode::distinguishing: return "distinguishing";
    case VerifyMode::majority_distinguishing: return "majority_distinguishing";
    case VerifyMode::arc_majority: return "arc_majority";
    }
    return "?";
}

} // namespace majicolor
