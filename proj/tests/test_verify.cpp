#include <catch_amalgamated.hpp>

#include "majicolor/family.hpp"
#include "majicolor/verify.hpp"
#include "support/naive.hpp"

using namespace majicolor;

static Graph cycle(int n) { return generate({FamilyKind::cycle, {n}}); }
static Graph complete(int n) { return generate({FamilyKind::complete, {n}}); }

// Fig-style fixture: K_5 with green spanning path + red/blue completion.
static EdgeColoring k5_fixture(const Graph &k5) {
    EdgeColoring c(k5, Palette::plain(3));
    auto set = [&](int u, int v, int col) { c.colors[*k5.edge_id(u - 1, v - 1)] = col; };
    const int green = 0, red = 1, blue = 2;
    set(1, 2, green), set(2, 3, green), set(3, 4, green), set(4, 5, green);
    set(1, 3, red), set(1, 4, red), set(2, 5, red);
    set(1, 5, blue), set(2, 4, blue), set(3, 5, blue);
    return c;
}

TEST_CASE("majority verification", "[verify]") {
    SECTION("C_4 alternating passes strict") {
        Graph g = cycle(4);
        EdgeColoring c(g, Palette::plain(2));
        c.colors = {0, 1, 1, 0};
        REQUIRE(verify_majority(g, c, MajorityMode::strict).pass);
    }
    SECTION("C_3 with 2 colors fails at the doubled vertex") {
        Graph g = cycle(3);
        EdgeColoring c(g, Palette::plain(2));
        c.colors = {0, 1, 0};
        auto strict = verify_majority(g, c, MajorityMode::strict);
        REQUIRE_FALSE(strict.pass);
        REQUIRE(strict.violations.size() == 1);
        // vertex 1 sees edges (0,1) and (1,2), both color 0
        REQUIRE(strict.violations[0].vertex == 1);
        REQUIRE(strict.violations[0].count == 2);
        // pigeonhole: two of the three edges share a color, and a doubled
        // color at a degree-2 vertex already exceeds ceil(d/2); so every
        // 2-coloring of C_3 fails weak as well
        for (int mask = 0; mask < 8; ++mask) {
            EdgeColoring w(g, Palette::plain(2));
            for (int i = 0; i < 3; ++i) w.colors[i] = (mask >> i) & 1;
            REQUIRE_FALSE(verify_majority(g, w, MajorityMode::weak).pass);
        }
    }
    SECTION("K_5 fixture passes strict: at most two incident edges share a color") {
        Graph g = complete(5);
        auto c = k5_fixture(g);
        REQUIRE(verify_majority(g, c, MajorityMode::strict).pass);
        REQUIRE(c.colors_used() == 3);
    }
    SECTION("almost mode exempts leaves") {
        Graph g = Graph::from_pairs(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}});
        EdgeColoring c(g, Palette::plain(3));
        c.colors[*g.edge_id(0, 1)] = 0;
        c.colors[*g.edge_id(1, 2)] = 1;
        c.colors[*g.edge_id(0, 2)] = 2;
        c.colors[*g.edge_id(2, 3)] = 0; // vertex 3 has degree 1
        REQUIRE_FALSE(verify_majority(g, c, MajorityMode::strict).pass);
        REQUIRE(verify_majority(g, c, MajorityMode::almost).pass);
    }
}

TEST_CASE("tallies conserve degree", "[verify]") {
    Rng rng(4);
    for (int t = 0; t < 10; ++t) {
        Graph g = naive::random_connected_min_deg(9, rng.below(12), 1, rng);
        EdgeColoring c(g, Palette::plain(3));
        for (auto &x : c.colors) x = rng.below(3);
        auto tal = c.tallies(g);
        for (int v = 0; v < g.num_vertices(); ++v) {
            int sum = 0;
            for (auto [col, cnt] : tal[v]) sum += cnt;
            REQUIRE(sum == g.degree(v));
        }
    }
}

TEST_CASE("strict implies weak implies almost", "[verify]") {
    Rng rng(13);
    for (int t = 0; t < 40; ++t) {
        Graph g = naive::random_connected_min_deg(8, rng.below(10), 1, rng);
        EdgeColoring c(g, Palette::plain(3));
        for (auto &x : c.colors) x = rng.below(3);
        bool strict = verify_majority(g, c, MajorityMode::strict).pass;
        bool weak = verify_majority(g, c, MajorityMode::weak).pass;
        bool almost = verify_majority(g, c, MajorityMode::almost).pass;
        if (strict) REQUIRE(weak);
        if (strict) REQUIRE(almost);
        // weak == strict on even degrees only; almost relaxes degree-1
    }
}

TEST_CASE("distinguishing verification", "[verify]") {
    SECTION("K_5 fixture is distinguishing") {
        Graph g = complete(5);
        REQUIRE(verify_distinguishing(g, k5_fixture(g)).pass);
    }
    SECTION("monochromatic C_5 fails with a witness") {
        Graph g = cycle(5);
        EdgeColoring c(g, Palette::plain(1));
        c.colors.assign(5, 0);
        auto rep = verify_distinguishing(g, c);
        REQUIRE_FALSE(rep.pass);
        REQUIRE(rep.witness_automorphism.has_value());
        REQUIRE_FALSE(rep.witness_automorphism->is_identity());
        REQUIRE(naive::perm_is_automorphism(g, rep.witness_automorphism->images));
    }
    SECTION("any coloring of an asymmetric graph passes") {
        Graph g = Graph::from_pairs(6, {{0, 2}, {0, 3}, {0, 5}, {1, 2}, {1, 4}, {2, 3}});
        REQUIRE(naive::is_asymmetric(g));
        EdgeColoring c(g, Palette::plain(1));
        c.colors.assign(6, 0);
        REQUIRE(verify_distinguishing(g, c).pass);
    }
    SECTION("invariant under palette relabeling") {
        Rng rng(77);
        for (int t = 0; t < 10; ++t) {
            Graph g = naive::random_connected_min_deg(8, rng.below(10), 1, rng);
            EdgeColoring c1(g, Palette::plain(3)), c2(g, Palette::plain(3));
            for (int i = 0; i < g.num_edges(); ++i) c1.colors[i] = rng.below(3);
            int relabel[3] = {2, 0, 1};
            for (int i = 0; i < g.num_edges(); ++i) c2.colors[i] = relabel[c1.colors[i]];
            REQUIRE(verify_distinguishing(g, c1).pass == verify_distinguishing(g, c2).pass);
        }
    }
}

TEST_CASE("arc majority verification", "[verify]") {
    SECTION("opposite-arc pairs around C_4") {
        Digraph d = symmetric_closure(cycle(4));
        ArcColoring c(d, Palette::plain(2));
        // both arcs of each edge share the edge's alternating color
        const Graph g = cycle(4);
        EdgeColoring ec(g, Palette::plain(2));
        ec.colors = {0, 1, 1, 0};
        for (int id = 0; id < d.num_arcs(); ++id) {
            auto [u, v] = d.arc(id);
            c.colors[id] = ec.colors[*g.edge_id(u, v)];
        }
        REQUIRE(verify_arc_majority(d, c).pass);
    }
    SECTION("monochromatic symmetric K_3 fails") {
        Digraph d = symmetric_closure(complete(3));
        ArcColoring c(d, Palette::plain(1));
        c.colors.assign(6, 0);
        REQUIRE_FALSE(verify_arc_majority(d, c).pass);
    }
    SECTION("a single symmetric edge cannot pass") {
        Digraph d = symmetric_closure(Graph::from_pairs(2, {{0, 1}}));
        ArcColoring c(d, Palette::plain(2));
        c.colors = {0, 1};
        REQUIRE_FALSE(verify_arc_majority(d, c).pass);
    }
}

TEST_CASE("strict edge coloring lifts to symmetric arcs", "[verify]") {
    Rng rng(55);
    for (int t = 0; t < 10; ++t) {
        Graph g = naive::random_connected_min_deg(8, 8, 2, rng);
        EdgeColoring ec(g, Palette::plain(4));
        for (auto &x : ec.colors) x = rng.below(4);
        if (!verify_majority(g, ec, MajorityMode::strict).pass) continue;
        Digraph d = symmetric_closure(g);
        ArcColoring ac(d, ec.palette);
        for (int id = 0; id < d.num_arcs(); ++id) {
            auto [u, v] = d.arc(id);
            ac.colors[id] = ec.colors[*g.edge_id(u, v)];
        }
        REQUIRE(verify_arc_majority(d, ac).pass);
    }
}

TEST_CASE("majority distinguishing conjunction", "[verify]") {
    SECTION("K_6 paper fixture passes with exactly 3 colors") {
        Graph g = complete(6);
        EdgeColoring c(g, Palette::plain(3));
        auto set = [&](int u, int v, int col) { c.colors[*g.edge_id(u - 1, v - 1)] = col; };
        const int green = 0, red = 1, blue = 2;
        set(1, 2, green), set(2, 3, green), set(3, 4, green), set(4, 5, green), set(5, 6, green);
        set(1, 3, red), set(1, 4, red), set(2, 5, red), set(2, 6, red), set(3, 6, red);
        set(1, 5, blue), set(1, 6, blue), set(2, 4, blue), set(3, 5, blue), set(4, 6, blue);
        auto rep = verify_majority_distinguishing(g, c);
        REQUIRE(rep.pass);
        REQUIRE(rep.colors_used == 3);
    }
    SECTION("C_4 alternating fails distinguishing half") {
        Graph g = cycle(4);
        EdgeColoring c(g, Palette::plain(2));
        c.colors = {0, 1, 1, 0};
        auto rep = verify_majority_distinguishing(g, c);
        REQUIRE_FALSE(rep.pass);
        REQUIRE(rep.witness_automorphism.has_value());
    }
    SECTION("no 3-coloring of K_4 passes") {
        Graph g = complete(4);
        Rng rng(2);
        EdgeColoring c(g, Palette::plain(3));
        for (int t = 0; t < 200; ++t) {
            for (auto &x : c.colors) x = rng.below(3);
            REQUIRE_FALSE(verify_majority_distinguishing(g, c).pass);
        }
    }
}
