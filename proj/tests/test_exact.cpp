#include <catch_amalgamated.hpp>

#include "majicolor/exact.hpp"
#include "majicolor/family.hpp"
#include "support/naive.hpp"

using namespace majicolor;

static Graph cycle(int n) { return generate({FamilyKind::cycle, {n}}); }
static Graph complete(int n) { return generate({FamilyKind::complete, {n}}); }

TEST_CASE("exact paper constants", "[exact]") {
    SECTION("M'_D(K_3) = 3 and M'_D(K_4) = 5") {
        auto r3 = exact_index(complete(3), IndexKind::majority_distinguishing, 6);
        REQUIRE(r3.status == ExactStatus::found);
        REQUIRE(r3.k == 3);
        auto r4 = exact_index(complete(4), IndexKind::majority_distinguishing, 6);
        REQUIRE(r4.status == ExactStatus::found);
        REQUIRE(r4.k == 5);
        REQUIRE(verify_majority_distinguishing(complete(4), *r4.witness).pass);
    }
    SECTION("M'(C_3) = 3, M'(C_4) = 2") {
        REQUIRE(exact_index(cycle(3), IndexKind::majority, 5).k == 3);
        REQUIRE(exact_index(cycle(4), IndexKind::majority, 5).k == 2);
    }
    SECTION("D'(C_5) = 3") {
        auto r = exact_index(cycle(5), IndexKind::distinguishing, 5);
        REQUIRE(r.k == 3);
        REQUIRE(verify_distinguishing(cycle(5), *r.witness).pass);
    }
    SECTION("chi'_D(K_4) = 5") {
        REQUIRE(exact_index(complete(4), IndexKind::proper_distinguishing, 6).k == 5);
    }
}

TEST_CASE("witnesses certify", "[exact]") {
    Rng rng(8);
    for (int t = 0; t < 6; ++t) {
        Graph g = naive::random_connected_min_deg(7, 4 + rng.below(4), 2, rng);
        auto r = exact_index(g, IndexKind::majority_distinguishing, 6);
        REQUIRE(r.status == ExactStatus::found);
        REQUIRE(verify_majority_distinguishing(g, *r.witness).pass);
        REQUIRE(r.witness->colors_used() <= r.k);
        // minimality: one fewer color admits no coloring
        if (r.k > 1) {
            auto lower = exact_index(g, IndexKind::majority_distinguishing, r.k - 1);
            REQUIRE(lower.status == ExactStatus::infeasible_up_to_kmax);
        }
    }
}

TEST_CASE("status taxonomy", "[exact]") {
    SECTION("degree-1 vertices make majority infeasible") {
        Graph g = generate({FamilyKind::path, {3}});
        REQUIRE(exact_index(g, IndexKind::majority, 8).status == ExactStatus::infeasible_up_to_kmax);
    }
    SECTION("budget exhaustion is distinct") {
        auto r = exact_index(complete(7), IndexKind::majority_distinguishing, 2, 10);
        REQUIRE(r.status == ExactStatus::budget_exhausted);
    }
    SECTION("k_max too small") {
        REQUIRE(exact_index(cycle(3), IndexKind::majority, 2).status ==
                ExactStatus::infeasible_up_to_kmax);
    }
}

TEST_CASE("exact arc indices", "[exact]") {
    SECTION("symmetric C_3 needs 2 arc colors") {
        // oracle cross-check: brute force over all 2-colorings of the 6 arcs
        Digraph d = symmetric_closure(cycle(3));
        bool any2 = false;
        for (uint32_t mask = 0; mask < 64; ++mask) {
            ArcColoring c(d, Palette::plain(2));
            for (int i = 0; i < 6; ++i) c.colors[i] = (mask >> i) & 1;
            any2 |= verify_arc_majority(d, c).pass;
        }
        REQUIRE(any2);
        auto r = exact_arc_index(d, ArcIndexKind::arc_majority, 4);
        REQUIRE(r.status == ExactStatus::found);
        REQUIRE(r.k == 2);
        REQUIRE(verify_arc_majority(d, *r.witness).pass);
    }
    SECTION("single symmetric edge infeasible for all k") {
        Digraph d = symmetric_closure(Graph::from_pairs(2, {{0, 1}}));
        REQUIRE(exact_arc_index(d, ArcIndexKind::arc_majority, 6).status ==
                ExactStatus::infeasible_up_to_kmax);
    }
    SECTION("symmetric C_4 needs 2") {
        Digraph d = symmetric_closure(cycle(4));
        auto r = exact_arc_index(d, ArcIndexKind::arc_majority, 4);
        REQUIRE(r.k == 2);
    }
    SECTION("distinguishing variant certifies") {
        Digraph d = symmetric_closure(cycle(5));
        auto r = exact_arc_index(d, ArcIndexKind::arc_majority_distinguishing, 5);
        REQUIRE(r.status == ExactStatus::found);
        REQUIRE(verify_arc_majority_distinguishing(d, *r.witness).pass);
    }
}

TEST_CASE("monotonicity under palette extension", "[exact]") {
    Graph g = complete(5);
    auto r = exact_index(g, IndexKind::majority_distinguishing, 3);
    auto r2 = exact_index(g, IndexKind::majority_distinguishing, 6);
    REQUIRE(r.status == ExactStatus::found);
    REQUIRE(r.k == r2.k); // growing k_max cannot change an already-found k
    // a witness for k stays valid with a larger declared palette
    EdgeColoring wide(g, Palette::plain(6));
    wide.colors = r.witness->colors;
    REQUIRE(verify_majority_distinguishing(g, wide).pass);
}

TEST_CASE("probe conjecture", "[exact]") {
    SECTION("K_7 is consistent: M'_D <= 3 <= 5") {
        auto rep = probe_conjecture(complete(7));
        REQUIRE(rep.preconditions_met);
        REQUIRE(rep.status == ExactStatus::found);
        REQUIRE(rep.k == 3);
        REQUIRE(rep.consistent);
    }
    SECTION("K_4 fails the asymmetric-subgraph precondition") {
        auto rep = probe_conjecture(complete(4));
        REQUIRE_FALSE(rep.preconditions_met);
        REQUIRE_FALSE(rep.has_asymmetric_subgraph);
    }
    SECTION("random instance reports consistency") {
        Rng rng(5);
        Graph g = naive::random_connected_min_deg(8, 6, 2, rng);
        auto rep = probe_conjecture(g);
        if (rep.preconditions_met && rep.status == ExactStatus::found) REQUIRE(rep.consistent);
    }
}
