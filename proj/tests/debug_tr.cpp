#include <iostream>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "surflink/analysis.hpp"
#include "surflink/json_io.hpp"

using namespace surflink;

int main() {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        DiagramOnSurface m = fixtures::random_map(rng, 2 + trial % 4);
        bool primary = is_twist_reduced(m).ok;
        bool naive = oracles::naive_twist_reduced(m);
        if (primary == naive) continue;
        std::cout << "trial " << trial << " primary=" << primary << " naive=" << naive
                  << "\n";
        std::cout << map_to_json(m, true) << "\n";
        // Re-run the naive with tracing.
        RefinedComplex rc = refine(m, true);
        auto regions = twist_regions(m);
        std::cout << "twist regions:";
        for (auto& tr : regions) {
            std::cout << " [";
            for (auto v : tr.crossings) std::cout << v << " ";
            std::cout << (tr.closed ? "closed" : "open") << "]";
        }
        std::cout << "\n";
        for (const auto& darts : oracles::all_simple_cycles(rc, 4)) {
            CurveOnSurface curve{&rc, darts, false};
            if (curve_weight(curve) != 4) continue;
            const int mm = static_cast<int>(darts.size());
            std::vector<int> heavy;
            for (int i = 0; i < mm; ++i)
                if (rc.is_diagram_dart(darts[i])) heavy.push_back(i);
            if (heavy.size() != 4) continue;
            auto near_vertex = [&](int dart) -> VertexId {
                const auto& info = rc.edges[rc.edge_of(dart)];
                DartId d0 = m.edge_dart(info.orig_edge);
                return info.half == 0 ? m.vertex_of(d0) : m.vertex_of(m.alpha(d0));
            };
            // report cycles that the naive would flag
            for (int rot = 0; rot < 4; ++rot) {
                int h0 = heavy[rot], h1 = heavy[(rot + 1) % 4];
                int h2 = heavy[(rot + 2) % 4], h3 = heavy[(rot + 3) % 4];
                VertexId v1 = near_vertex(darts[h0]);
                if (near_vertex(darts[h1]) != v1) continue;
                VertexId v2 = near_vertex(darts[h2]);
                if (near_vertex(darts[h3]) != v2 || v1 == v2) continue;
                std::cout << "candidate cycle, heavies near v" << v1 << ",v" << v1
                          << ",v" << v2 << ",v" << v2 << " darts:";
                for (int d : darts) std::cout << " " << d;
                std::cout << "\n  edges:";
                for (int i : heavy)
                    std::cout << " e" << rc.edges[rc.edge_of(darts[i])].orig_edge << "(h"
                              << rc.edges[rc.edge_of(darts[i])].half << ")";
                CutResult cut = cut_along(curve);
                std::cout << " disc=" << cut.has_disc_side << " comps:";
                for (auto& c : cut.components) {
                    std::cout << " (g" << c.genus << ",b" << c.boundaries << ",[";
                    for (auto v : c.crossings) std::cout << v << " ";
                    std::cout << "])";
                }
                std::cout << "\n";
            }
        }
        return 0;
    }
    std::cout << "no mismatch\n";
    return 0;
}
