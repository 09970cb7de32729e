#include <doctest.h>

#include "support/fixtures.hpp"
#include "surflink/json_io.hpp"
#include "surflink/surface_map.hpp"

using namespace surflink;

TEST_CASE("kink diagram on the sphere") {
    DiagramOnSurface m = fixtures::kink();
    CHECK(m.crossings() == 1);
    CHECK(m.edge_count() == 2);
    CHECK(m.face_walks().size() == 3);
    std::vector<size_t> lens;
    for (const auto& w : m.face_walks()) lens.push_back(w.size());
    std::sort(lens.begin(), lens.end());
    CHECK(lens == std::vector<size_t>{1, 1, 2});
    CHECK(m.genus() == 0);
    CHECK(link_components(m) == 1);
}

TEST_CASE("build_map validation errors") {
    // sigma with a short cycle inside a block
    std::vector<DartId> sigma = {1, 0, 3, 2};  // two 2-cycles
    CHECK_THROWS_AS(build_map(sigma, {1, 0, 3, 2}, {true}), MapError);
    try {
        build_map(sigma, {1, 0, 3, 2}, {true});
    } catch (const MapError& e) {
        CHECK(e.code() == MapErrorCode::NonQuadrivalent);
    }

    // alpha with a fixed point
    CHECK_THROWS_AS(build_map(fixtures::canonical_sigma(1), {0, 1, 3, 2}, {true}), MapError);

    // disconnected: two kinks
    std::vector<DartId> alpha = {1, 0, 3, 2, 5, 4, 7, 6};
    try {
        build_map(fixtures::canonical_sigma(2), alpha, {true, true});
        CHECK(false);
    } catch (const MapError& e) {
        CHECK(e.code() == MapErrorCode::DisconnectedGraph);
    }

    // orphan walk
    DiagramOnSurface kink = fixtures::kink();
    CHECK_THROWS_AS(build_map(fixtures::canonical_sigma(1), {1, 0, 3, 2}, {true},
                              {Region{{0, 1}, 0}}),
                    MapError);

    // merging two walks of the kink into one region raises the ambient
    // genus by one; the decoration is valid
    DiagramOnSurface decorated = build_map(fixtures::canonical_sigma(1), {1, 0, 3, 2},
                                           {true}, {Region{{0, 1}, 0}, Region{{2}, 0}});
    CHECK(decorated.genus() == 1);
}

TEST_CASE("hopf style two-crossing diagram") {
    DiagramOnSurface m = fixtures::hopf();
    CHECK(m.genus() == 0);
    CHECK(m.face_walks().size() == 4);
    CHECK(link_components(m) == 2);
}

TEST_CASE("2x2 grid on the torus") {
    DiagramOnSurface m = fixtures::torus_grid();
    CHECK(m.crossings() == 4);
    CHECK(m.edge_count() == 8);
    CHECK(m.face_walks().size() == 4);
    CHECK(m.genus() == 1);
    for (const auto& w : m.face_walks()) CHECK(w.size() == 4);

    RegionDual dual = region_dual(m);
    CHECK(dual.nodes == 4);
    CHECK(dual.arcs.size() == 8);
    for (const auto& inc : dual.incident) CHECK(inc.size() == 4);
}

TEST_CASE("chain links") {
    for (int k = 2; k <= 6; ++k) {
        CAPTURE(k);
        DiagramOnSurface m = fixtures::chain_link(k);
        CHECK(m.genus() == 0);
        CHECK(static_cast<int>(m.face_walks().size()) == k + 2);
        CHECK(link_components(m) == (k % 2 == 0 ? 2 : 1));
    }
}

TEST_CASE("region dual of the kink") {
    DiagramOnSurface m = fixtures::kink();
    RegionDual dual = region_dual(m);
    CHECK(dual.nodes == 3);
    CHECK(dual.arcs.size() == 2);
}

TEST_CASE("link components invariant under dart conjugation") {
    // Relabel crossings of the trefoil by a rotation; components agree.
    DiagramOnSurface m = fixtures::trefoil();
    int k = m.crossings();
    auto perm = [&](DartId d) { return (d + 4) % (4 * k); };
    std::vector<DartId> alpha(4 * k);
    std::vector<bool> over(k);
    for (DartId d = 0; d < 4 * k; ++d) alpha[perm(d)] = perm(m.alpha(d));
    for (int v = 0; v < k; ++v) over[(v + 1) % k] = m.over_even_pair(v);
    DiagramOnSurface relabeled = build_map(fixtures::canonical_sigma(k), alpha, over);
    CHECK(link_components(relabeled) == link_components(m));
}

TEST_CASE("JSON round trip is the identity on canonical form") {
    for (const DiagramOnSurface& m :
         {fixtures::kink(), fixtures::hopf(), fixtures::torus_grid(), fixtures::trefoil()}) {
        std::string once = map_to_json(m);
        DiagramOnSurface back = map_from_json(once);
        CHECK(map_to_json(back) == once);
    }
}

TEST_CASE("malformed JSON is rejected") {
    CHECK_THROWS_AS(map_from_json("{"), MapError);
    CHECK_THROWS_AS(map_from_json("{\"darts\": 4}"), MapError);
}
