#include <doctest.h>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "surflink/analysis.hpp"

using namespace surflink;

TEST_CASE("alternating detection") {
    CHECK(is_alternating(fixtures::kink()));
    CHECK(is_alternating(fixtures::trefoil()));
    // Flipping a single crossing bit breaks it.
    DiagramOnSurface m = fixtures::trefoil();
    std::vector<bool> over = m.over_even_pair_table();
    over[1] = !over[1];
    DiagramOnSurface bad =
        build_map(m.sigma_table(), m.alpha_table(), over);
    CHECK_FALSE(is_alternating(bad));
}

TEST_CASE("checkerboard colouring") {
    CheckerboardResult kink = checkerboard(fixtures::kink());
    CHECK(kink.ok);
    CheckerboardResult grid = checkerboard(fixtures::torus_grid());
    CHECK(grid.ok);
    CheckerboardResult bad = checkerboard(fixtures::torus_three_face());
    CHECK_FALSE(bad.ok);
    CHECK(bad.odd_cycle_regions.size() % 2 == 1);
}

TEST_CASE("twist regions of chain links") {
    for (int k = 2; k <= 5; ++k) {
        DiagramOnSurface m = fixtures::chain_link(k);
        auto regions = twist_regions(m);
        REQUIRE(regions.size() == 1);
        CHECK(static_cast<int>(regions[0].crossings.size()) == k);
        CHECK(twist_number(m) == 1);
    }
    CHECK(twist_number(fixtures::kink()) == 1);
    CHECK(twist_number(fixtures::torus_grid()) == 4);  // no bigons
}

TEST_CASE("twist number bounded by crossing number with equality iff no bigons") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        DiagramOnSurface m = fixtures::random_map(rng, 2 + trial % 6);
        int t = twist_number(m);
        CHECK(t <= crossing_number(m));
        bool has_bigon = false;
        for (int r = 0; r < static_cast<int>(m.regions().size()); ++r) {
            if (!m.region_is_disc(r)) continue;
            const auto& w = m.face_walks()[m.regions()[r].walks[0]];
            if (w.size() == 2 && m.vertex_of(w[0]) != m.vertex_of(w[1])) has_bigon = true;
        }
        CHECK((t == crossing_number(m)) == !has_bigon);
    }
}

TEST_CASE("kink is not weakly prime on the sphere") {
    DiscCheckResult res = is_weakly_prime(fixtures::kink());
    CHECK_FALSE(res.ok);
    REQUIRE(res.witness.has_value());
    CHECK(res.witness->reason == "TooFewCrossingsOnSphere");
}

TEST_CASE("trefoil and chain links are weakly prime") {
    CHECK(is_weakly_prime(fixtures::trefoil()).ok);
    CHECK(is_weakly_prime(fixtures::chain_link(4)).ok);
    CHECK(is_weakly_prime(fixtures::hopf()).ok);
}

TEST_CASE("connected sum of trefoils is not weakly prime") {
    DiagramOnSurface m = fixtures::connected_sum(fixtures::trefoil(), fixtures::trefoil());
    CHECK(m.genus() == 0);
    DiscCheckResult res = is_weakly_prime(m);
    CHECK_FALSE(res.ok);
    REQUIRE(res.witness.has_value());
    CHECK(res.witness->disc_crossings.size() == 3);
}

TEST_CASE("chain links are twist reduced") {
    for (int k = 2; k <= 5; ++k) {
        CAPTURE(k);
        CHECK(is_twist_reduced(fixtures::chain_link(k)).ok);
    }
}

TEST_CASE("edge width of the torus grid is 2") {
    EdgeWidthResult ew = edge_width(fixtures::torus_grid());
    REQUIRE(ew.finite);
    CHECK(ew.width == 2);
    // and matches exhaustive enumeration
    auto brute = edge_width_by_enumeration(fixtures::torus_grid(), 4);
    REQUIRE(brute.has_value());
    CHECK(*brute == 2);
}

TEST_CASE("edge width on the sphere is infinite") {
    EdgeWidthResult ew = edge_width(fixtures::trefoil());
    CHECK_FALSE(ew.finite);
    CHECK_FALSE(edge_width_by_enumeration(fixtures::trefoil(), 6).has_value());
}

TEST_CASE("edge width certificate is essential and attains the width") {
    DiagramOnSurface m = fixtures::torus_grid();
    EdgeWidthResult ew = edge_width(m);
    REQUIRE(ew.finite);
    RefinedComplex rc = refine(m);
    CurveOnSurface cert = curve_from_edges(rc, ew.certificate_edges);
    CHECK(is_essential(cert).essential);
    CHECK(curve_weight(cert) == ew.width);
}

TEST_CASE("zero edge width detects essential cores in non-disc regions") {
    // Torus grid with one region carrying the genus: a core curve inside
    // that region avoids the diagram entirely.
    DiagramOnSurface base = fixtures::torus_grid();
    std::vector<Region> regions;
    regions.push_back(Region{{0}, 1});
    for (int w = 1; w < 4; ++w) regions.push_back(Region{{w}, 0});
    DiagramOnSurface m = build_map(base.sigma_table(), base.alpha_table(),
                                   base.over_even_pair_table(), regions);
    EdgeWidthResult ew = edge_width(m);
    REQUIRE(ew.finite);
    CHECK(ew.width == 0);
}

TEST_CASE("edge width equals brute force on random small maps") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 25; ++trial) {
        DiagramOnSurface m = fixtures::random_map(rng, 2 + trial % 5);
        CAPTURE(trial);
        EdgeWidthResult ew = edge_width(m);
        auto brute = edge_width_by_enumeration(m, ew.finite ? ew.width : 6);
        if (ew.finite) {
            REQUIRE(brute.has_value());
            CHECK(*brute == ew.width);
        } else {
            CHECK_FALSE(brute.has_value());
        }
    }
}

TEST_CASE("edge width is deterministic across thread counts") {
    std::mt19937 rng(5);
    DiagramOnSurface m = fixtures::random_map(rng, 6);
    EdgeWidthResult ref = edge_width(m, 1);
    for (int threads = 2; threads <= 4; ++threads) {
        EdgeWidthResult ew = edge_width(m, threads);
        CHECK(ew.finite == ref.finite);
        if (ref.finite) {
            CHECK(ew.width == ref.width);
            CHECK(ew.certificate_edges == ref.certificate_edges);
        }
    }
}

TEST_CASE("disc checks agree with the naive oracles on random maps") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        DiagramOnSurface m = fixtures::random_map(rng, 2 + trial % 4);
        CAPTURE(trial);
        CHECK(is_weakly_prime(m).ok == oracles::naive_weakly_prime(m));
        CHECK(is_twist_reduced(m).ok == oracles::naive_twist_reduced(m));
    }
}

TEST_CASE("representativity over an empty family is infinite") {
    DiagramOnSurface m = fixtures::torus_grid();
    RepresentativityResult res = representativity_over(m, {});
    CHECK_FALSE(res.finite);
}
