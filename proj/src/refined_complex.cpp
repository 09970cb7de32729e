#include "surflink/refined_complex.hpp"

#include <algorithm>
#include <numeric>

namespace surflink {

namespace {

struct Side {
    enum Type { WalkDart, CutPlus, CutMinus } type;
    int value;  // map dart, or cut-arc refined edge id
    int half;   // split diagram sides only
};

}  // namespace

RefinedComplex refine(const DiagramOnSurface& map, bool split_diagram_edges) {
    RefinedComplex rc;
    rc.base = &map;
    rc.split = split_diagram_edges;

    const int map_edges = map.edge_count();
    rc.refined_of_map_edge.assign(map_edges, {-1, -1});
    for (EdgeId e = 0; e < map_edges; ++e) {
        if (split_diagram_edges) {
            rc.refined_of_map_edge[e] = {2 * e, 2 * e + 1};
        } else {
            rc.refined_of_map_edge[e] = {e, -1};
        }
    }
    int next_edge = split_diagram_edges ? 2 * map_edges : map_edges;
    rc.edges.resize(next_edge);
    for (EdgeId e = 0; e < map_edges; ++e) {
        rc.edges[rc.refined_of_map_edge[e][0]] = {RefinedComplex::EdgeKind::Diagram, e,
                                                  split_diagram_edges ? 0 : -1, -1};
        if (split_diagram_edges)
            rc.edges[rc.refined_of_map_edge[e][1]] = {RefinedComplex::EdgeKind::Diagram, e, 1, -1};
    }

    const int n_regions = static_cast<int>(map.regions().size());
    std::vector<std::vector<Side>> polygons(n_regions);
    std::vector<int> spoke_base(n_regions), center_tag(n_regions);

    // Sides of map dart w in traversal order; side darts resolve later.
    auto walk_sides = [&](const std::vector<DartId>& walk, std::vector<Side>& out) {
        // Rotate the walk so its first side follows the smallest corner key.
        // The corner before side d_i is keyed by alpha(d_{i-1}).
        const int len = static_cast<int>(walk.size());
        int best = 0;
        DartId best_key = map.alpha(walk[(0 + len - 1) % len]);
        for (int i = 1; i < len; ++i) {
            DartId key = map.alpha(walk[(i + len - 1) % len]);
            if (key < best_key) {
                best_key = key;
                best = i;
            }
        }
        for (int i = 0; i < len; ++i) {
            DartId w = walk[(best + i) % len];
            if (split_diagram_edges) {
                out.push_back({Side::WalkDart, w, 0});
                out.push_back({Side::WalkDart, w, 1});
            } else {
                out.push_back({Side::WalkDart, w, -1});
            }
        }
    };

    for (int r = 0; r < n_regions; ++r) {
        const Region& region = map.regions()[r];
        std::vector<int> walk_ids = region.walks;
        std::sort(walk_ids.begin(), walk_ids.end());
        const int b = static_cast<int>(walk_ids.size());
        const int g = region.genus;

        std::vector<Side>& poly = polygons[r];
        walk_sides(map.face_walks()[walk_ids[0]], poly);
        for (int i = 1; i < b; ++i) {
            int arc = next_edge++;
            rc.edges.push_back({RefinedComplex::EdgeKind::Cut, -1, -1, r});
            poly.push_back({Side::CutPlus, arc, -1});
            walk_sides(map.face_walks()[walk_ids[i]], poly);
            poly.push_back({Side::CutMinus, arc, -1});
        }
        for (int j = 0; j < g; ++j) {
            int h1 = next_edge++;
            rc.edges.push_back({RefinedComplex::EdgeKind::Cut, -1, -1, r});
            int h2 = next_edge++;
            rc.edges.push_back({RefinedComplex::EdgeKind::Cut, -1, -1, r});
            poly.push_back({Side::CutPlus, h1, -1});
            poly.push_back({Side::CutPlus, h2, -1});
            poly.push_back({Side::CutMinus, h1, -1});
            poly.push_back({Side::CutMinus, h2, -1});
        }

        spoke_base[r] = next_edge;
        next_edge += static_cast<int>(poly.size());
        for (size_t i = 0; i < poly.size(); ++i)
            rc.edges.push_back({RefinedComplex::EdgeKind::Spoke, -1, -1, r});
    }

    const int n_darts = 2 * next_edge;
    rc.phi.assign(n_darts, -1);
    rc.face_of.assign(n_darts, -1);
    rc.side_dart_of_map_dart.assign(map.dart_count(), -1);

    auto side_dart = [&](const Side& s) -> int {
        switch (s.type) {
            case Side::CutPlus: return 2 * s.value;
            case Side::CutMinus: return 2 * s.value + 1;
            case Side::WalkDart: {
                DartId w = s.value;
                EdgeId e = map.edge_of(w);
                bool canonical = (map.edge_dart(e) == w);
                int re;
                if (!split_diagram_edges) {
                    re = rc.refined_of_map_edge[e][0];
                } else {
                    // Halves in traversal order: the canonical dart meets
                    // half 0 first, the partner meets half 1 first.
                    int traversal_half = canonical ? s.half : 1 - s.half;
                    re = rc.refined_of_map_edge[e][traversal_half];
                }
                return 2 * re + (canonical ? 0 : 1);
            }
        }
        return -1;
    };

    rc.region_faces.assign(n_regions, {});
    for (int r = 0; r < n_regions; ++r) {
        const std::vector<Side>& poly = polygons[r];
        const int k = static_cast<int>(poly.size());
        for (int i = 0; i < k; ++i) {
            int sd = side_dart(poly[i]);
            int spoke_fwd = 2 * (spoke_base[r] + i);
            int spoke_back = 2 * (spoke_base[r] + (i + 1) % k) + 1;
            int f = static_cast<int>(rc.faces.size());
            rc.faces.push_back({spoke_fwd, sd, spoke_back});
            rc.region_of_face.push_back(r);
            rc.region_faces[r].push_back(f);
            rc.phi[spoke_fwd] = sd;
            rc.phi[sd] = spoke_back;
            rc.phi[spoke_back] = spoke_fwd;
            rc.face_of[spoke_fwd] = rc.face_of[sd] = rc.face_of[spoke_back] = f;
            if (poly[i].type == Side::WalkDart &&
                (poly[i].half <= 0))  // first half (or whole) leaves vertex(w)
                rc.side_dart_of_map_dart[poly[i].value] = sd;
        }
    }

    for (int d = 0; d < n_darts; ++d)
        if (rc.phi[d] == -1)
            throw MapError(MapErrorCode::BadInput, "refinement left an unused dart");

    rc.sigma.assign(n_darts, -1);
    for (int d = 0; d < n_darts; ++d) rc.sigma[d] = rc.phi[d ^ 1];

    // Vertices: orbits of sigma.
    rc.vertex_of.assign(n_darts, -1);
    for (int d = 0; d < n_darts; ++d) {
        if (rc.vertex_of[d] != -1) continue;
        int v = rc.vertex_count++;
        int cur = d;
        do {
            rc.vertex_of[cur] = v;
            cur = rc.sigma[cur];
        } while (cur != d);
    }

    // Original crossings must appear as refined vertices carrying exactly
    // the four map darts in rotation order.
    rc.crossing_of_vertex.assign(rc.vertex_count, -1);
    rc.vertex_of_crossing.assign(map.crossings(), -1);
    for (VertexId v = 0; v < map.crossings(); ++v) {
        int rv = rc.vertex_of[rc.side_dart_of_map_dart[4 * v]];
        for (int i = 1; i < 4; ++i)
            if (rc.vertex_of[rc.side_dart_of_map_dart[4 * v + i]] != rv)
                throw MapError(MapErrorCode::BadInput,
                               "refinement scrambled crossing " + std::to_string(v));
        if (rc.crossing_of_vertex[rv] != -1)
            throw MapError(MapErrorCode::BadInput, "refinement merged two crossings");
        rc.crossing_of_vertex[rv] = v;
        rc.vertex_of_crossing[v] = rv;
    }

    // Euler characteristic of the refinement must match the surface.
    long chi = static_cast<long>(rc.vertex_count) - rc.edge_count() + rc.face_count();
    if (chi != map.euler_characteristic())
        throw MapError(MapErrorCode::EulerMismatch,
                       "refinement Euler characteristic " + std::to_string(chi) +
                           " does not match surface " +
                           std::to_string(map.euler_characteristic()));
    return rc;
}

}  // namespace surflink
