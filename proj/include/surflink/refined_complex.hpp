#pragma once

#include <array>
#include <vector>

#include "surflink/surface_map.hpp"

namespace surflink {

/// Cell decomposition refining a diagram: every disc region is starred
/// from an interior point, every non-disc region is cut to a disc by a
/// canonical arc system (boundary-joining arcs then handle arcs, anchored
/// at the lexicographically smallest corner darts) and then starred. All
/// 2-cells are triangles. Diagram edges keep crossing cost 1; spokes and
/// cut arcs cost 0.
///
/// In split mode every diagram edge is subdivided at one interior point
/// and both halves carry cost 1; curve searches that must cross a single
/// edge at two points use this variant.
struct RefinedComplex {
    enum class EdgeKind { Diagram, Spoke, Cut };

    struct EdgeInfo {
        EdgeKind kind;
        EdgeId orig_edge = -1;  // Diagram only
        int half = -1;          // 0/1 in split mode, -1 otherwise
        int region = -1;        // Spoke/Cut only
    };

    const DiagramOnSurface* base = nullptr;
    bool split = false;

    // Two darts per refined edge: dart 2e is the side in the face that
    // traverses the edge in its canonical direction, alpha is xor 1.
    std::vector<int> phi;       // face successor per refined dart
    std::vector<int> sigma;     // derived, phi∘alpha
    std::vector<int> face_of;   // per refined dart
    std::vector<int> vertex_of; // per refined dart: origin vertex orbit
    std::vector<std::array<int, 3>> faces;  // triangles in phi order
    std::vector<EdgeInfo> edges;
    std::vector<int> region_of_face;
    std::vector<int> crossing_of_vertex;    // rc vertex -> map crossing or -1
    std::vector<int> vertex_of_crossing;    // map crossing -> rc vertex
    std::vector<std::vector<int>> region_faces;  // polygon-ordered faces per region
    // Refined diagram edge ids per map edge ([e] or [near-half-of-edge-dart, far-half]).
    std::vector<std::array<int, 2>> refined_of_map_edge;
    // Refined dart leaving vertex(w) on the side of map dart w.
    std::vector<int> side_dart_of_map_dart;
    int vertex_count = 0;

    int dart_count() const { return static_cast<int>(phi.size()); }
    int edge_count() const { return static_cast<int>(edges.size()); }
    int face_count() const { return static_cast<int>(faces.size()); }
    int alpha(int dart) const { return dart ^ 1; }
    int edge_of(int dart) const { return dart >> 1; }
    int dart_of(int edge, int side) const { return 2 * edge + side; }
    int cost(int edge) const { return edges[edge].kind == EdgeKind::Diagram ? 1 : 0; }
    bool is_diagram_dart(int dart) const {
        return edges[dart >> 1].kind == EdgeKind::Diagram;
    }
};

RefinedComplex refine(const DiagramOnSurface& map, bool split_diagram_edges = false);

}  // namespace surflink
