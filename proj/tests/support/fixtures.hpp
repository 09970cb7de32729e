#pragma once

#include <random>
#include <vector>

#include "surflink/analysis.hpp"
#include "surflink/curves.hpp"
#include "surflink/refined_complex.hpp"
#include "surflink/surface_map.hpp"

namespace fixtures {

using namespace surflink;

inline std::vector<DartId> canonical_sigma(int crossings) {
    std::vector<DartId> sigma(4 * crossings);
    for (int v = 0; v < crossings; ++v)
        for (int i = 0; i < 4; ++i) sigma[4 * v + i] = 4 * v + (i + 1) % 4;
    return sigma;
}

/// One-crossing kink on the sphere.
inline DiagramOnSurface kink() {
    return build_map(canonical_sigma(1), {1, 0, 3, 2}, {true});
}

/// Standard two-crossing alternating diagram of the Hopf link on the sphere.
inline DiagramOnSurface hopf() {
    // ports per crossing: 0=N 1=W 2=S 3=E
    std::vector<DartId> alpha(8, -1);
    auto link = [&](DartId a, DartId b) { alpha[a] = b; alpha[b] = a; };
    link(0, 4);
    link(2, 6);
    link(3, 5);
    link(1, 7);
    return build_map(canonical_sigma(2), alpha, {true, true});
}

/// Closed alternating chain of k >= 2 crossings: the (2,k) torus link
/// diagram on the sphere. Ports: 0=NE 1=NW 2=SW 3=SE.
inline DiagramOnSurface chain_link(int k) {
    std::vector<DartId> alpha(4 * k, -1);
    auto d = [&](int v, int p) { return 4 * v + p; };
    auto link = [&](DartId a, DartId b) { alpha[a] = b; alpha[b] = a; };
    for (int i = 0; i + 1 < k; ++i) {
        link(d(i, 2), d(i + 1, 1));
        link(d(i, 3), d(i + 1, 0));
    }
    link(d(0, 1), d(k - 1, 2));
    link(d(0, 0), d(k - 1, 3));
    return build_map(canonical_sigma(k), alpha, std::vector<bool>(k, true));
}

inline DiagramOnSurface trefoil() { return chain_link(3); }

/// 2x2 grid on the torus: four crossings, four quads.
inline DiagramOnSurface torus_grid() {
    std::vector<DartId> alpha(16, -1);
    auto id = [](int i, int j) { return i + 2 * j; };
    auto link = [&](DartId a, DartId b) { alpha[a] = b; alpha[b] = a; };
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            link(4 * id(i, j) + 3, 4 * id((i + 1) % 2, j) + 1);  // E to W
            link(4 * id(i, j) + 0, 4 * id(i, (j + 1) % 2) + 2);  // N to S
        }
    }
    std::vector<bool> over = {true, false, false, true};
    return build_map(canonical_sigma(4), alpha, over);
}

/// Three-crossing closed chain wired onto the torus: three complementary
/// regions, pairwise adjacent, so no checkerboard colouring exists.
inline DiagramOnSurface torus_three_face() {
    std::vector<DartId> alpha(12, -1);
    auto d = [&](int v, int p) { return 4 * (v % 3) + p; };
    auto link = [&](DartId a, DartId b) { alpha[a] = b; alpha[b] = a; };
    for (int i = 0; i < 3; ++i) {
        link(d(i, 2), d(i + 1, 0));  // S to N
        link(d(i, 3), d(i + 1, 1));  // E to W
    }
    return build_map(canonical_sigma(3), alpha, {true, true, true});
}

/// Connected sum along the first edges of two diagrams (splice).
inline DiagramOnSurface connected_sum(const DiagramOnSurface& a, const DiagramOnSurface& b) {
    int off = a.dart_count();
    std::vector<DartId> base(a.dart_count() + b.dart_count());
    for (DartId x = 0; x < a.dart_count(); ++x) base[x] = a.alpha(x);
    for (DartId x = 0; x < b.dart_count(); ++x) base[off + x] = off + b.alpha(x);
    std::vector<bool> over;
    for (int v = 0; v < a.crossings(); ++v) over.push_back(a.over_even_pair(v));
    for (int v = 0; v < b.crossings(); ++v) over.push_back(b.over_even_pair(v));
    DartId d1 = a.edge_dart(0), d1p = a.alpha(d1);
    DartId d2 = off + b.edge_dart(0), d2p = base[d2];
    // Two splice orientations; keep the genus-additive one.
    DiagramOnSurface last;
    for (int variant = 0; variant < 2; ++variant) {
        std::vector<DartId> alpha = base;
        if (variant == 0) {
            alpha[d1] = d2p;
            alpha[d2p] = d1;
            alpha[d1p] = d2;
            alpha[d2] = d1p;
        } else {
            alpha[d1] = d2;
            alpha[d2] = d1;
            alpha[d1p] = d2p;
            alpha[d2p] = d1p;
        }
        last = build_map(canonical_sigma(a.crossings() + b.crossings()), alpha, over);
        if (last.genus() == a.genus() + b.genus()) return last;
    }
    return last;
}

/// Random connected 4-valent map with a random region decoration of
/// genus at most `max_genus`. Crossing count and surface genus vary.
inline DiagramOnSurface random_map(std::mt19937& rng, int crossings, int max_genus = 2) {
    for (int attempt = 0; attempt < 200; ++attempt) {
        std::vector<DartId> darts(4 * crossings);
        for (int i = 0; i < 4 * crossings; ++i) darts[i] = i;
        std::shuffle(darts.begin(), darts.end(), rng);
        std::vector<DartId> alpha(4 * crossings);
        for (size_t i = 0; i + 1 < darts.size(); i += 2) {
            alpha[darts[i]] = darts[i + 1];
            alpha[darts[i + 1]] = darts[i];
        }
        std::vector<bool> over(crossings);
        for (int v = 0; v < crossings; ++v) over[v] = rng() & 1;
        DiagramOnSurface all_disc;
        try {
            all_disc = build_map(canonical_sigma(crossings), alpha, over);
        } catch (const MapError&) {
            continue;  // disconnected
        }
        if (all_disc.genus() > max_genus) continue;
        int walks = static_cast<int>(all_disc.face_walks().size());
        int budget = max_genus - all_disc.genus();
        std::vector<Region> regions;
        std::vector<int> pool(walks);
        for (int w = 0; w < walks; ++w) pool[w] = w;
        std::shuffle(pool.begin(), pool.end(), rng);
        size_t at = 0;
        while (at < pool.size()) {
            Region r{{pool[at]}, 0};
            ++at;
            // Occasionally merge another walk (costs one genus) or add
            // region genus, within the surface budget.
            while (budget > 0 && at < pool.size() && rng() % 4 == 0) {
                r.walks.push_back(pool[at]);
                ++at;
                --budget;
            }
            if (budget > 0 && rng() % 8 == 0) {
                r.genus += 1;
                --budget;
            }
            regions.push_back(std::move(r));
        }
        return build_map(canonical_sigma(crossings), alpha, over, regions);
    }
    throw std::runtime_error("random map generation failed");
}

}  // namespace fixtures
