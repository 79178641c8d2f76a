#include <catch_amalgamated.hpp>

#include "majicolor/construct/two_coloring.hpp"
#include "majicolor/family.hpp"
#include "support/naive.hpp"

using namespace majicolor;
using namespace majicolor::construct;

static Graph cycle(int n) { return generate({FamilyKind::cycle, {n}}); }
static Graph complete(int n) { return generate({FamilyKind::complete, {n}}); }

TEST_CASE("balanced two coloring small cases", "[two-coloring]") {
    SECTION("C_4 splits every vertex 1/1") {
        auto r = two_coloring_balanced(cycle(4));
        REQUIRE_FALSE(r.case_two);
        auto tal = r.coloring.tallies(cycle(4));
        for (int v = 0; v < 4; ++v) {
            REQUIRE(tal[v][0] == 1);
            REQUIRE(tal[v][1] == 1);
        }
    }
    SECTION("C_3 case (ii): requested special gets both same-colored edges") {
        Graph g = cycle(3);
        TwoColoringSpec spec;
        spec.special_vertex = 1;
        auto r = two_coloring_balanced(g, spec);
        REQUIRE(r.case_two);
        REQUIRE(r.special_vertex == 1);
        auto tal = r.coloring.tallies(g);
        bool excess = tal[1][0] == 2 || tal[1][1] == 2;
        REQUIRE(excess);
        for (int v : {0, 2}) REQUIRE(std::max(tal[v][0], tal[v][1]) == 1);
    }
    SECTION("K_4 case (i): every vertex at most ceil(3/2)=2 per color") {
        auto r = two_coloring_balanced(complete(4));
        REQUIRE_FALSE(r.case_two);
        auto tal = r.coloring.tallies(complete(4));
        for (int v = 0; v < 4; ++v)
            for (auto [c, cnt] : tal[v]) REQUIRE(cnt <= 2);
        // brute-force existence check of the bound
        bool exists = false;
        for (int mask = 0; mask < 64 && !exists; ++mask) {
            EdgeColoring c(complete(4), Palette::plain(2));
            for (int i = 0; i < 6; ++i) c.colors[i] = (mask >> i) & 1;
            auto t = c.tallies(complete(4));
            bool ok = true;
            for (int v = 0; v < 4; ++v)
                for (auto [cc, cnt] : t[v]) ok = ok && cnt <= 2;
            exists |= ok;
        }
        REQUIRE(exists);
    }
    SECTION("empty graph rejected") {
        REQUIRE_THROWS_AS(two_coloring_balanced(Graph(3, {})), EmptyGraph);
    }
}

TEST_CASE("balanced two coloring exact per-case counts", "[two-coloring]") {
    Rng rng(101);
    for (int t = 0; t < 120; ++t) {
        int n = 3 + rng.below(38);
        Graph g = naive::random_connected_min_deg(n, rng.below(2 * n), 1, rng);
        auto r = two_coloring_balanced(g);
        auto tal = r.coloring.tallies(g);
        bool any_odd = false;
        for (int v = 0; v < n; ++v) any_odd |= g.degree(v) % 2 == 1;
        if (!any_odd && g.num_edges() % 2 == 1) {
            REQUIRE(r.case_two);
            REQUIRE(r.special_vertex.has_value());
            int u = *r.special_vertex;
            for (int v = 0; v < n; ++v) {
                int d = g.degree(v);
                if (d == 0) continue;
                int hi = std::max(tal[v].count(0) ? tal[v][0] : 0, tal[v].count(1) ? tal[v][1] : 0);
                if (v == u) REQUIRE(hi == d / 2 + 1);
                else REQUIRE(hi == d / 2);
            }
        } else {
            REQUIRE_FALSE(r.case_two);
            for (int v = 0; v < n; ++v) {
                int d = g.degree(v);
                int hi = std::max(tal[v].count(0) ? tal[v][0] : 0, tal[v].count(1) ? tal[v][1] : 0);
                REQUIRE(hi <= (d + 1) / 2);
            }
        }
    }
}

TEST_CASE("almost majority with at most 4 colors", "[two-coloring]") {
    SECTION("C_4 gets 2 colors") {
        auto c = almost_majority_4(cycle(4));
        REQUIRE(c.colors_used() == 2);
        REQUIRE(verify_majority(cycle(4), c, MajorityMode::strict).pass);
    }
    SECTION("C_5 odd cycle needs 3") {
        auto c = almost_majority_4(cycle(5));
        REQUIRE(c.colors_used() == 3);
        REQUIRE(verify_majority(cycle(5), c, MajorityMode::strict).pass);
    }
    SECTION("two colors when non-leaf degrees are even") {
        // triangle with two pendant edges at one vertex: non-leaves stay even
        Graph g = Graph::from_pairs(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {2, 4}});
        auto c = almost_majority_4(g);
        REQUIRE(c.colors_used() <= 2);
        REQUIRE(verify_majority(g, c, MajorityMode::almost).pass);
    }
    SECTION("random graphs with min degree 2 certify") {
        Rng rng(7);
        for (int t = 0; t < 30; ++t) {
            int n = 5 + rng.below(12);
            Graph g = naive::random_connected_min_deg(n, rng.below(3 * n), 2, rng);
            auto c = almost_majority_4(g);
            REQUIRE(c.colors_used() <= 4);
            REQUIRE(verify_majority(g, c, MajorityMode::almost).pass);
        }
    }
    SECTION("random graphs with leaves certify almost") {
        Rng rng(19);
        for (int t = 0; t < 20; ++t) {
            Graph g = naive::random_connected_min_deg(10, rng.below(10), 1, rng);
            auto c = almost_majority_4(g);
            REQUIRE(c.colors_used() <= 4);
            REQUIRE(verify_majority(g, c, MajorityMode::almost).pass);
        }
    }
}

TEST_CASE("eulerian alternation", "[two-coloring]") {
    SECTION("C_4 passes majority but not distinguishing") {
        auto c = eulerian_2coloring(cycle(4));
        REQUIRE(verify_majority(cycle(4), c, MajorityMode::strict).pass);
        REQUIRE_FALSE(verify_distinguishing(cycle(4), c).pass);
    }
    SECTION("odd edge count rejected") {
        REQUIRE_THROWS_AS(eulerian_2coloring(cycle(5)), OddEdgeCount);
        REQUIRE_THROWS_AS(eulerian_2coloring(generate({FamilyKind::path, {4}})), NotEulerian);
    }
    SECTION("edge-glued cycles {3,5,7}: majority passes, distinguishing certified") {
        Graph g = generate({FamilyKind::glued_cycle_edge, {3, 5, 7}});
        auto c = eulerian_2coloring(g, EulerOrderRule::shortest_cycle_first);
        REQUIRE(verify_majority(g, c, MajorityMode::strict).pass);
        REQUIRE(verify_distinguishing(g, c).pass);
    }
    SECTION("vertex-glued even cycles {4,6,8}: 2-color majority distinguishing") {
        Graph g = generate({FamilyKind::glued_cycle_vertex, {4, 6, 8}});
        auto c = eulerian_2coloring(g, EulerOrderRule::shortest_cycle_first);
        REQUIRE(c.colors_used() == 2);
        REQUIRE(verify_majority_distinguishing(g, c).pass);
    }
    SECTION("repeated even length distinguished by the traversal order") {
        Graph g = generate({FamilyKind::glued_cycle_edge, {4, 4, 5}});
        auto c = eulerian_2coloring(g, EulerOrderRule::shortest_cycle_first);
        REQUIRE(verify_majority(g, c, MajorityMode::strict).pass);
        REQUIRE(verify_distinguishing(g, c).pass);
    }
}
