#include <iostream>

#include "support/fixtures.hpp"
#include "surflink/analysis.hpp"

using namespace surflink;

int main() {
    std::mt19937 rng(99);
    DiagramOnSurface m;
    for (int trial = 0; trial <= 1; ++trial) m = fixtures::random_map(rng, 2 + trial % 4);
    RefinedComplex rc = refine(m, true);

    std::vector<int> cycle = {25, 35, 33, 20, 64, 23, 29, 19, 60, 16};
    for (int d : cycle) {
        const auto& info = rc.edges[rc.edge_of(d)];
        std::cout << "dart " << d << " edge " << rc.edge_of(d) << " kind "
                  << (info.kind == RefinedComplex::EdgeKind::Diagram
                          ? "diagram"
                          : info.kind == RefinedComplex::EdgeKind::Spoke ? "spoke" : "cut")
                  << " orig " << info.orig_edge << " half " << info.half << " region-of-edge "
                  << info.region << " face " << rc.face_of[d] << " (region "
                  << rc.region_of_face[rc.face_of[d]] << ") alpha-face "
                  << rc.face_of[rc.alpha(d)] << "\n";
    }
    std::cout << "\nfaces and their dart origins (crossing vertices marked):\n";
    for (int d : cycle) {
        int f = rc.face_of[d];
        std::cout << "face " << f << ": darts";
        for (int x : rc.faces[f]) {
            std::cout << " " << x << "(v" << rc.vertex_of[x];
            int cv = rc.crossing_of_vertex[rc.vertex_of[x]];
            if (cv >= 0) std::cout << "=X" << cv;
            std::cout << ")";
        }
        std::cout << "\n";
    }
    std::cout << "\nwalks:\n";
    for (size_t w = 0; w < m.face_walks().size(); ++w) {
        std::cout << "walk " << w << " (region " << m.region_of_walk(w) << "):";
        for (DartId d : m.face_walks()[w]) std::cout << " " << d;
        std::cout << "\n";
    }
    return 0;
}
