#include "surflink/families.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace surflink {

namespace {

// Ports in counterclockwise rotation order; dart id = 4*crossing + port.
enum Port { N = 0, W = 1, S = 2, E = 3 };

struct MapBuilder {
    int crossings;
    std::vector<DartId> alpha;
    std::vector<bool> in_port;

    explicit MapBuilder(int v) : crossings(v), alpha(4 * v, -1), in_port(4 * v, false) {}

    static DartId dart(int v, int port) { return 4 * v + port; }

    void link(DartId a, DartId b) {
        if (alpha[a] != -1 || alpha[b] != -1)
            throw MapError(MapErrorCode::BadInput, "port wired twice");
        alpha[a] = b;
        alpha[b] = a;
    }

    std::vector<DartId> canonical_sigma() const {
        std::vector<DartId> sigma(4 * crossings);
        for (int v = 0; v < crossings; ++v)
            for (int i = 0; i < 4; ++i) sigma[4 * v + i] = 4 * v + (i + 1) % 4;
        return sigma;
    }

    // Solves for over/under bits making every edge join an over end to an
    // under end (the alternating condition).
    std::vector<bool> solve_alternating() const {
        std::vector<int> bit(crossings, -1);
        for (int start = 0; start < crossings; ++start) {
            if (bit[start] != -1) continue;
            bit[start] = 0;
            std::deque<int> queue = {start};
            while (!queue.empty()) {
                int v = queue.front();
                queue.pop_front();
                for (int i = 0; i < 4; ++i) {
                    DartId d = 4 * v + i;
                    DartId a = alpha[d];
                    int w = a / 4;
                    // over(d) = bit[v] xor (port parity); edges need
                    // over(d) != over(alpha d).
                    int need = 1 ^ (i % 2) ^ (a % 4 % 2) ^ bit[v];
                    if (bit[w] == -1) {
                        bit[w] = need;
                        queue.push_back(w);
                    } else if (bit[w] != need) {
                        throw MapError(MapErrorCode::BadInput,
                                       "template admits no alternating assignment");
                    }
                }
            }
        }
        // bit[v] == over-ness of port N; the even pair is {N, S}.
        std::vector<bool> over(crossings);
        for (int v = 0; v < crossings; ++v) over[v] = bit[v] == 1;
        return over;
    }
};

// Grid coordinates: columns c0..c5 are the eastbound lane, c6..c11 the
// westbound lane; row 0 is the top of each lane. Ring rho in {1,2,3}
// crosses columns 3-rho, 2+rho (lane 1) and 9-rho, 8+rho (lane 2).
int grid_id(int c, int r) { return 6 * c + r; }
DartId grid_dart(int c, int r, int port) { return 4 * grid_id(c, r) + port; }

void wire_grid_common(MapBuilder& b) {
    for (int c = 0; c <= 4; ++c)
        for (int r = 0; r < 6; ++r) b.link(grid_dart(c, r, E), grid_dart(c + 1, r, W));
    for (int c = 6; c <= 10; ++c)
        for (int r = 0; r < 6; ++r) b.link(grid_dart(c, r, W), grid_dart(c + 1, r, E));
    for (int i = 0; i < 6; ++i) b.link(grid_dart(5, i, E), grid_dart(6, 5 - i, E));
    for (int j = 0; j < 6; ++j) b.link(grid_dart(11, j, W), grid_dart(0, 5 - j, W));
    for (int c = 0; c < 12; ++c)
        for (int r = 0; r <= 4; ++r) b.link(grid_dart(c, r, S), grid_dart(c, r + 1, N));
}

void grid_in_ports(MapBuilder& b) {
    for (int c = 0; c < 12; ++c) {
        for (int r = 0; r < 6; ++r) {
            b.in_port[grid_dart(c, r, c <= 5 ? W : E)] = true;  // strand flow
            bool west_side = (c <= 2) || (c >= 9);
            b.in_port[grid_dart(c, r, west_side ? S : N)] = true;  // clockwise rings
        }
    }
}

std::vector<std::pair<int, int>> cable_disc_passes() {
    std::vector<std::pair<int, int>> passes;
    for (int s = 0; s < 6; ++s) passes.push_back({s, +1});   // eastbound lane
    for (int s = 5; s >= 0; --s) passes.push_back({s, -1});  // westbound return
    return passes;
}

// Finds the face walk consisting of exactly the given edges.
int find_walk_with_edges(const DiagramOnSurface& map, std::vector<EdgeId> edges) {
    std::sort(edges.begin(), edges.end());
    for (int w = 0; w < static_cast<int>(map.face_walks().size()); ++w) {
        const auto& walk = map.face_walks()[w];
        if (walk.size() != edges.size()) continue;
        std::vector<EdgeId> have;
        for (DartId d : walk) have.push_back(map.edge_of(d));
        std::sort(have.begin(), have.end());
        if (have == edges) return w;
    }
    throw MapError(MapErrorCode::BadInput, "expected face walk not found");
}

// Shortest 0-cost dual path between two faces of one region; smallest
// dart ids win ties, so routing is deterministic.
std::vector<int> zero_path(const RefinedComplex& rc, int from_face, int to_face) {
    if (from_face == to_face) return {};
    int region = rc.region_of_face[from_face];
    if (rc.region_of_face[to_face] != region)
        throw MapError(MapErrorCode::BadInput, "0-path endpoints in different regions");
    std::vector<int> parent(rc.face_count(), -2);
    parent[from_face] = -1;
    std::deque<int> queue = {from_face};
    while (!queue.empty()) {
        int f = queue.front();
        queue.pop_front();
        if (f == to_face) break;
        for (int d : rc.faces[f]) {
            if (rc.cost(rc.edge_of(d)) != 0) continue;
            int nd = rc.alpha(d);
            int g = rc.face_of[nd];
            if (rc.region_of_face[g] != region || parent[g] != -2) continue;
            parent[g] = nd;
            queue.push_back(g);
        }
    }
    if (parent[to_face] == -2)
        throw MapError(MapErrorCode::BadInput, "region fan is not connected");
    std::vector<int> darts;
    for (int f = to_face; parent[f] != -1; f = rc.face_of[rc.alpha(parent[f])])
        darts.push_back(parent[f]);
    std::reverse(darts.begin(), darts.end());
    return darts;
}

// Assembles a curve from an ordered list of crossing side-darts, joining
// consecutive crossings by shortest 0-paths.
CurveOnSurface route_by_side_darts(const RefinedComplex& rc, const std::vector<int>& xs) {
    std::vector<int> darts;
    const int k = static_cast<int>(xs.size());
    for (int i = 0; i < k; ++i) {
        darts.push_back(xs[i]);
        int from = rc.face_of[xs[i]];
        int to = rc.face_of[rc.alpha(xs[(i + 1) % k])];
        auto path = zero_path(rc, from, to);
        darts.insert(darts.end(), path.begin(), path.end());
    }
    return make_curve(rc, std::move(darts));
}

// Resolves crossing sides by requiring consecutive crossings to share a
// region, then routes.
CurveOnSurface route_edges(const RefinedComplex& rc, const std::vector<int>& edges) {
    const int k = static_cast<int>(edges.size());
    std::vector<int> sides;
    auto dfs = [&](auto&& self, int i) -> bool {
        if (i == k) {
            int last = rc.region_of_face[rc.face_of[rc.dart_of(edges[k - 1], sides[k - 1])]];
            int first = rc.region_of_face[rc.face_of[rc.alpha(rc.dart_of(edges[0], sides[0]))]];
            return last == first;
        }
        for (int s = 0; s < 2; ++s) {
            if (i > 0) {
                int prev = rc.region_of_face[rc.face_of[rc.dart_of(edges[i - 1], sides[i - 1])]];
                int here = rc.region_of_face[rc.face_of[rc.alpha(rc.dart_of(edges[i], s))]];
                if (prev != here) continue;
            }
            sides.push_back(s);
            if (self(self, i + 1)) return true;
            sides.pop_back();
        }
        return false;
    };
    if (!dfs(dfs, 0))
        throw MapError(MapErrorCode::BadInput, "marked-curve edges do not chain");
    std::vector<int> xs;
    for (int i = 0; i < k; ++i) xs.push_back(rc.dart_of(edges[i], sides[i]));
    return route_by_side_darts(rc, xs);
}

// Zero-weight curve parallel to one boundary walk of a genus-0 region.
CurveOnSurface boundary_parallel(const RefinedComplex& rc, int region, int walk) {
    const DiagramOnSurface& map = *rc.base;
    const auto& polygon = rc.region_faces[region];
    const int k = static_cast<int>(polygon.size());

    enum Kind { WalkSide, Plus, Minus };
    std::vector<Kind> kinds(k);
    std::vector<int> values(k);  // walk id or cut-arc edge id
    for (int i = 0; i < k; ++i) {
        int side = rc.faces[polygon[i]][1];
        const auto& info = rc.edges[rc.edge_of(side)];
        if (info.kind == RefinedComplex::EdgeKind::Diagram) {
            DartId w = (side % 2 == 0) ? map.edge_dart(info.orig_edge)
                                       : map.alpha(map.edge_dart(info.orig_edge));
            kinds[i] = WalkSide;
            values[i] = map.walk_of_dart(w);
        } else {
            kinds[i] = (side % 2 == 0) ? Plus : Minus;
            values[i] = rc.edge_of(side);
        }
    }

    int run_start = -1, run_len = 0;
    for (int i = 0; i < k; ++i) {
        if (kinds[i] == WalkSide && values[i] == walk &&
            !(kinds[(i + k - 1) % k] == WalkSide && values[(i + k - 1) % k] == walk)) {
            run_start = i;
            for (int j = i; kinds[j % k] == WalkSide && values[j % k] == walk; ++j) ++run_len;
            break;
        }
    }
    if (run_start == -1) throw MapError(MapErrorCode::BadInput, "walk not on region");

    auto spoke_into = [&](int pos) { return rc.faces[polygon[(pos % k + k) % k]][0]; };
    std::vector<int> darts;
    if (run_start > 0) {
        // Interior stretch bracketed by one cut arc.
        int before = run_start - 1, after = run_start + run_len;
        if (kinds[before] != Plus || kinds[after % k] != Minus ||
            values[before] != values[after % k])
            throw MapError(MapErrorCode::BadInput, "walk stretch is not arc-bracketed");
        for (int i = 0; i <= run_len; ++i) darts.push_back(spoke_into(run_start + i));
        darts.push_back(rc.dart_of(values[before], 0));  // cross the arc into its plus side
    } else {
        // First walk: skip over each bracketed stretch through its arc.
        int pos = run_len;
        for (int i = 1; i < run_len; ++i) darts.push_back(spoke_into(i));
        while (pos < k) {
            darts.push_back(spoke_into(pos));
            if (kinds[pos] == Plus) {
                darts.push_back(rc.dart_of(values[pos], 1));  // jump to the minus side
                int minus = -1;
                for (int i = 0; i < k; ++i)
                    if (kinds[i] == Minus && values[i] == values[pos]) minus = i;
                pos = minus + 1;
            } else if (kinds[pos] == Minus) {
                throw MapError(MapErrorCode::BadInput, "unexpected arc side order");
            } else {
                ++pos;
            }
        }
        darts.push_back(spoke_into(0));
    }
    return make_curve(rc, std::move(darts));
}

void install_marked_curves(DiagramOnSurface& map, TemplateKind kind) {
    RefinedComplex rc = refine(map, false);
    std::map<std::string, CurveOnSurface> curves;

    auto edge_at = [&](int c, int r, int port) { return map.edge_of(grid_dart(c, r, port)); };

    std::vector<int> u_edges, w_edges, v_edges;
    for (int j = 0; j < 6; ++j) u_edges.push_back(edge_at(11, j, W));
    for (int i = 5; i >= 0; --i) w_edges.push_back(edge_at(5, i, E));
    v_edges.push_back(edge_at(0, 0, N));
    for (int r = 0; r < 6; ++r) v_edges.push_back(edge_at(0, r, E));
    for (int r = 0; r < 6; ++r) v_edges.push_back(edge_at(10, r, W));
    v_edges.push_back(edge_at(11, 5, S));
    curves.emplace("u", route_edges(rc, u_edges));
    curves.emplace("w", route_edges(rc, w_edges));
    curves.emplace("v", route_edges(rc, v_edges));

    if (kind == TemplateKind::T1) {
        int pants = -1;
        for (int r = 0; r < static_cast<int>(map.regions().size()); ++r)
            if (map.regions()[r].walks.size() == 3) pants = r;
        std::vector<std::pair<std::string, std::vector<EdgeId>>> spec = {
            {"x", {edge_at(0, 0, N), edge_at(11, 5, S), edge_at(11, 0, W), edge_at(5, 0, E)}},
            {"y", {edge_at(11, 0, W), edge_at(0, 5, S)}},
            {"z", {edge_at(5, 5, E), edge_at(6, 0, N)}},
        };
        // x is parallel to the outer wall (the four-edge walk), y and z
        // to the two collar walls.
        for (auto& [name, edges] : spec) {
            int walk = find_walk_with_edges(map, edges);
            curves.emplace(name, boundary_parallel(rc, pants, walk));
        }
    } else {
        auto thread_dart = [&](int k, int port) { return 4 * (72 + 6 * k + 5 * 0) + port; };
        (void)thread_dart;
        auto t_id = [](int k, int m) { return 72 + 6 * k + m; };
        auto da_id = [](int j) { return 108 + j; };
        auto db_id = [](int j) { return 114 + j; };
        std::vector<int> x_edges = {
            map.edge_of(4 * da_id(5) + N),  // north-east dive
            map.edge_of(4 * da_id(0) + N),  // north-west dive
            map.edge_of(4 * db_id(5) + S),  // south-west dive
            map.edge_of(4 * db_id(0) + S),  // south-east dive
        };
        std::vector<int> y_edges, z_edges;
        for (int k = 0; k < 6; ++k) y_edges.push_back(map.edge_of(4 * t_id(k, 0) + W));
        for (int k = 0; k < 6; ++k) z_edges.push_back(map.edge_of(4 * t_id(k, 5) + E));
        curves.emplace("x", route_edges(rc, x_edges));
        curves.emplace("y", route_edges(rc, y_edges));
        curves.emplace("z", route_edges(rc, z_edges));
    }

    for (auto& [name, curve] : curves) {
        if (!is_essential(curve).essential)
            throw MapError(MapErrorCode::BadInput, "marked curve " + name + " is not essential");
        map.set_marked_curve(name, curve_edges(curve));
    }
}

DiagramOnSurface assemble(const MapBuilder& b, TemplateKind kind) {
    for (DartId d = 0; d < 4 * b.crossings; ++d)
        if (b.alpha[d] == -1)
            throw MapError(MapErrorCode::BadInput,
                           "unwired port at dart " + std::to_string(d));
    std::vector<bool> over = b.solve_alternating();
    DiagramOnSurface all_disc = build_map(b.canonical_sigma(), b.alpha, over);

    std::vector<Region> regions;
    if (kind == TemplateKind::T1) {
        auto edge = [&](int c, int r, int port) {
            return all_disc.edge_of(grid_dart(c, r, port));
        };
        int wy = find_walk_with_edges(all_disc, {edge(11, 0, W), edge(0, 5, S)});
        int wz = find_walk_with_edges(all_disc, {edge(5, 5, E), edge(6, 0, N)});
        int wout = find_walk_with_edges(
            all_disc, {edge(0, 0, N), edge(11, 5, S), edge(11, 0, W), edge(5, 0, E)});
        regions.push_back(Region{{wy, wz, wout}, 0});
        for (int w = 0; w < static_cast<int>(all_disc.face_walks().size()); ++w)
            if (w != wy && w != wz && w != wout) regions.push_back(Region{{w}, 0});
    }
    DiagramOnSurface map = build_map(b.canonical_sigma(), b.alpha, std::move(over),
                                     std::move(regions));
    if (map.genus() != 2)
        throw MapError(MapErrorCode::EulerMismatch, "template genus is not 2");
    install_marked_curves(map, kind);
    return map;
}

}  // namespace

Template make_template(TemplateKind kind) {
    if (kind == TemplateKind::T1) {
        MapBuilder b(72);
        wire_grid_common(b);
        for (int rho = 1; rho <= 3; ++rho) {
            int a = 3 - rho, e1 = 2 + rho, e2 = 9 - rho, w2 = 8 + rho;
            b.link(grid_dart(a, 5, S), grid_dart(w2, 0, N));   // west transition
            b.link(grid_dart(w2, 5, S), grid_dart(e2, 5, S));  // bottom stretch
            b.link(grid_dart(e2, 0, N), grid_dart(e1, 5, S));  // east transition
            b.link(grid_dart(e1, 0, N), grid_dart(a, 0, N));   // top stretch
        }
        grid_in_ports(b);
        return Template{kind, assemble(b, kind), b.in_port, cable_disc_passes()};
    }

    MapBuilder b(120);
    wire_grid_common(b);
    auto t_dart = [](int k, int m, int port) { return 4 * (72 + 6 * k + m) + port; };
    auto da_dart = [](int j, int port) { return 4 * (108 + j) + port; };
    auto db_dart = [](int j, int port) { return 4 * (114 + j) + port; };

    for (int rho = 1; rho <= 3; ++rho) {
        int a = 3 - rho, e1 = 2 + rho, e2 = 9 - rho, w2 = 8 + rho;
        int mw = 3 - rho, me = 2 + rho;  // thread column of this ring, west/east
        // West transition, subdivided by the six threads top to bottom.
        b.link(grid_dart(a, 5, S), t_dart(0, mw, N));
        for (int k = 0; k <= 4; ++k) b.link(t_dart(k, mw, S), t_dart(k + 1, mw, N));
        b.link(t_dart(5, mw, S), grid_dart(w2, 0, N));
        // East transition.
        b.link(grid_dart(e1, 5, S), t_dart(0, me, N));
        for (int k = 0; k <= 4; ++k) b.link(t_dart(k, me, S), t_dart(k + 1, me, N));
        b.link(t_dart(5, me, S), grid_dart(e2, 0, N));
        // Top stretch, crossed by the two top-dip legs.
        b.link(grid_dart(a, 0, N), da_dart(3 - rho, W));
        b.link(da_dart(3 - rho, E), da_dart(2 + rho, W));
        b.link(da_dart(2 + rho, E), grid_dart(e1, 0, N));
        // Bottom stretch, crossed by the bottom-dip legs.
        b.link(grid_dart(w2, 5, S), db_dart(2 + rho, W));
        b.link(db_dart(2 + rho, E), db_dart(3 - rho, W));
        b.link(db_dart(3 - rho, E), grid_dart(e2, 5, S));
    }
    // Thread strands.
    for (int k = 0; k < 6; ++k)
        for (int m = 0; m <= 4; ++m) b.link(t_dart(k, m, E), t_dart(k, m + 1, W));
    // Top dip: two legs joined under the innermost ring.
    b.link(da_dart(0, S), da_dart(1, N));
    b.link(da_dart(1, S), da_dart(2, N));
    b.link(da_dart(2, S), da_dart(3, S));  // turn inside the old bigon
    b.link(da_dart(3, N), da_dart(4, S));
    b.link(da_dart(4, N), da_dart(5, S));
    // Bottom dip.
    b.link(db_dart(0, N), db_dart(1, S));
    b.link(db_dart(1, N), db_dart(2, S));
    b.link(db_dart(2, N), db_dart(3, N));  // turn inside the old bigon
    b.link(db_dart(3, S), db_dart(4, N));
    b.link(db_dart(4, S), db_dart(5, N));
    // Closures through the back of the surface.
    b.link(t_dart(1, 5, E), t_dart(2, 0, W));
    b.link(t_dart(2, 5, E), t_dart(1, 0, W));
    b.link(t_dart(3, 5, E), t_dart(4, 0, W));
    b.link(t_dart(4, 5, E), t_dart(3, 0, W));
    b.link(da_dart(5, N), t_dart(0, 0, W));
    b.link(t_dart(0, 5, E), da_dart(0, N));
    b.link(t_dart(5, 5, E), db_dart(0, S));
    b.link(db_dart(5, S), t_dart(5, 0, W));

    grid_in_ports(b);
    for (int k = 0; k < 6; ++k) {
        for (int m = 0; m < 6; ++m) {
            b.in_port[t_dart(k, m, W)] = true;
            b.in_port[t_dart(k, m, m <= 2 ? S : N)] = true;
        }
    }
    for (int j = 0; j < 6; ++j) {
        b.in_port[da_dart(j, W)] = true;
        b.in_port[da_dart(j, j <= 2 ? N : S)] = true;
        b.in_port[db_dart(j, E)] = true;
        b.in_port[db_dart(j, j <= 2 ? S : N)] = true;
    }
    return Template{kind, assemble(b, kind), b.in_port, cable_disc_passes()};
}

namespace {

struct InsertResult {
    DiagramOnSurface map;
    std::vector<DartId> port_map;  // old external dart -> new dart
};

InsertResult insert_twists_impl(const Template& tmpl, const std::vector<int>& asg) {
    const DiagramOnSurface& old = tmpl.map;
    const int nv = old.crossings();
    if (static_cast<int>(asg.size()) != nv)
        throw MapError(MapErrorCode::InvalidAssignment, "assignment size mismatch");
    for (int t : asg)
        if (t < 1) throw MapError(MapErrorCode::InvalidAssignment, "twist count below 1");

    std::vector<int> base(nv + 1, 0);
    for (int v = 0; v < nv; ++v) base[v + 1] = base[v] + asg[v];
    const int nv_new = base[nv];

    std::vector<DartId> alpha_new(4 * nv_new, -1);
    std::vector<bool> over_new(nv_new, false);
    std::vector<DartId> port_map(4 * nv, -1);
    auto link = [&](DartId a, DartId b) {
        alpha_new[a] = b;
        alpha_new[b] = a;
    };

    for (int v = 0; v < nv; ++v) {
        int t = asg[v];
        if (t == 1) {
            for (int i = 0; i < 4; ++i) port_map[4 * v + i] = 4 * base[v] + i;
            over_new[base[v]] = old.over_even_pair(v);
            continue;
        }
        // In-ports are a sigma-adjacent pair; the chain axis separates
        // inflow from outflow.
        DartId i1 = -1;
        for (int i = 0; i < 4; ++i) {
            DartId d = 4 * v + i;
            if (tmpl.in_port[d] && tmpl.in_port[old.sigma(d)]) i1 = d;
        }
        if (i1 == -1)
            throw MapError(MapErrorCode::BadInput, "crossing without an oriented axis");
        DartId i2 = old.sigma(i1), o1 = old.sigma(i2), o2 = old.sigma(o1);
        bool x = old.is_over(i1);
        for (int j = 0; j < t; ++j) over_new[base[v] + j] = x;
        // Chain crossings in rotation order (NE, NW, SW, SE).
        for (int j = 0; j + 1 < t; ++j) {
            int m = base[v] + j;
            link(4 * m + 2, 4 * (m + 1) + 1);  // SW_j - NW_{j+1}
            link(4 * m + 3, 4 * (m + 1) + 0);  // SE_j - NE_{j+1}
        }
        port_map[i1] = 4 * base[v] + 0;
        port_map[i2] = 4 * base[v] + 1;
        port_map[o1] = 4 * (base[v] + t - 1) + 2;
        port_map[o2] = 4 * (base[v] + t - 1) + 3;
    }
    for (DartId d = 0; d < 4 * nv; ++d) {
        DartId a = old.alpha(d);
        if (d < a) link(port_map[d], port_map[a]);
    }

    std::vector<DartId> sigma_new(4 * nv_new);
    for (int v = 0; v < nv_new; ++v)
        for (int i = 0; i < 4; ++i) sigma_new[4 * v + i] = 4 * v + (i + 1) % 4;

    DiagramOnSurface probe = build_map(sigma_new, alpha_new, over_new);
    std::vector<Region> regions;
    if (tmpl.kind == TemplateKind::T1) {
        auto mapped_edge = [&](DartId d) { return probe.edge_of(port_map[d]); };
        int wy = find_walk_with_edges(
            probe, {mapped_edge(grid_dart(11, 0, W)), mapped_edge(grid_dart(0, 5, S))});
        int wz = find_walk_with_edges(
            probe, {mapped_edge(grid_dart(5, 5, E)), mapped_edge(grid_dart(6, 0, N))});
        int wout = find_walk_with_edges(
            probe, {mapped_edge(grid_dart(0, 0, N)), mapped_edge(grid_dart(11, 5, S)),
                    mapped_edge(grid_dart(11, 0, W)), mapped_edge(grid_dart(5, 0, E))});
        regions.push_back(Region{{wy, wz, wout}, 0});
        for (int w = 0; w < static_cast<int>(probe.face_walks().size()); ++w)
            if (w != wy && w != wz && w != wout) regions.push_back(Region{{w}, 0});
    }
    DiagramOnSurface out =
        build_map(std::move(sigma_new), std::move(alpha_new), std::move(over_new),
                  std::move(regions));
    if (out.genus() != 2)
        throw MapError(MapErrorCode::EulerMismatch, "twist insertion changed the surface");
    return {std::move(out), std::move(port_map)};
}

void transfer_marked_curves(const Template& tmpl, InsertResult& result) {
    const DiagramOnSurface& old = tmpl.map;
    RefinedComplex old_rc = refine(old, false);
    RefinedComplex new_rc = refine(result.map, false);

    // Pants walks of T1-derived maps, for rebuilding the zero-weight
    // parallels.
    int pants = -1;
    if (tmpl.kind == TemplateKind::T1)
        for (int r = 0; r < static_cast<int>(result.map.regions().size()); ++r)
            if (result.map.regions()[r].walks.size() == 3) pants = r;

    for (const auto& [name, edges] : old.marked_curves()) {
        CurveOnSurface curve = curve_from_edges(old_rc, edges);
        std::vector<int> new_sides;
        for (int d : curve.darts) {
            if (!old_rc.is_diagram_dart(d)) continue;
            EdgeId e = old_rc.edge_of(d);
            DartId w = (d % 2 == 0) ? old.edge_dart(e) : old.alpha(old.edge_dart(e));
            DartId w_new = result.port_map[w];
            EdgeId e_new = result.map.edge_of(w_new);
            int side = (w_new == result.map.edge_dart(e_new)) ? 0 : 1;
            new_sides.push_back(new_rc.dart_of(e_new, side));
        }
        CurveOnSurface transferred;
        if (new_sides.empty()) {
            // Zero-weight parallels live in the pants region; rebuild
            // against the corresponding wall.
            std::vector<EdgeId> wall;
            {
                // The old curve is parallel to the wall whose triangles
                // it traverses; recover it from the old polygon data.
                int f = old_rc.face_of[curve.darts[0]];
                int side_dart = old_rc.faces[f][1];
                const auto& info = old_rc.edges[old_rc.edge_of(side_dart)];
                int old_walk;
                if (info.kind == RefinedComplex::EdgeKind::Diagram) {
                    DartId w = (side_dart % 2 == 0)
                                   ? old.edge_dart(info.orig_edge)
                                   : old.alpha(old.edge_dart(info.orig_edge));
                    old_walk = old.walk_of_dart(w);
                } else {
                    throw MapError(MapErrorCode::BadInput,
                                   "cannot transfer zero-weight marked curve");
                }
                for (DartId d : old.face_walks()[old_walk])
                    wall.push_back(result.map.edge_of(result.port_map[d]));
            }
            std::sort(wall.begin(), wall.end());
            wall.erase(std::unique(wall.begin(), wall.end()), wall.end());
            int new_walk = find_walk_with_edges(result.map, wall);
            transferred = boundary_parallel(new_rc, pants, new_walk);
        } else {
            transferred = route_by_side_darts(new_rc, new_sides);
        }
        result.map.set_marked_curve(name, curve_edges(transferred));
    }
}

}  // namespace

DiagramOnSurface insert_twists(const Template& tmpl, const std::vector<int>& assignment) {
    InsertResult result = insert_twists_impl(tmpl, assignment);
    transfer_marked_curves(tmpl, result);
    return std::move(result.map);
}

std::vector<int> choose_knot_parity(const Template& tmpl, std::vector<int> assignment) {
    const int nv = tmpl.map.crossings();
    if (static_cast<int>(assignment.size()) != nv)
        throw MapError(MapErrorCode::InvalidAssignment, "assignment size mismatch");
    for (int round = 0; round <= nv; ++round) {
        InsertResult r = insert_twists_impl(tmpl, assignment);
        if (link_components(r.map) == 1) return assignment;
        // Component labels: darts joined by strand succession and by
        // edge involution lie on the same link component.
        const DiagramOnSurface& m = r.map;
        std::vector<int> comp(m.dart_count(), -1);
        int n_comp = 0;
        for (DartId d = 0; d < m.dart_count(); ++d) {
            if (comp[d] != -1) continue;
            std::vector<DartId> stack = {d};
            comp[d] = n_comp;
            while (!stack.empty()) {
                DartId x = stack.back();
                stack.pop_back();
                for (DartId y : {m.alpha(x), m.alpha(m.sigma(m.sigma(x)))}) {
                    if (comp[y] == -1) {
                        comp[y] = n_comp;
                        stack.push_back(y);
                    }
                }
            }
            ++n_comp;
        }
        std::vector<int> bases(nv + 1, 0);
        for (int v = 0; v < nv; ++v) bases[v + 1] = bases[v] + assignment[v];
        bool merged = false;
        for (int v = 0; v < nv && !merged; ++v) {
            DartId d0 = 4 * bases[v];
            if (comp[d0] != comp[m.sigma(d0)]) {
                assignment[v] += 1;
                merged = true;
            }
        }
        if (!merged)
            throw MapError(MapErrorCode::NoKnotParityFound,
                           "no crossing joins two link components");
    }
    throw MapError(MapErrorCode::NoKnotParityFound, "parity search did not converge");
}

int linking_number(const Template& tmpl, int i) {
    if (i < 0) throw MapError(MapErrorCode::BadInput, "negative twist-circle index");
    int sum = 0;
    for (auto [strand, sign] : tmpl.c_disc_passes) sum += sign;
    return sum;
}

int linking_number(const FamilyDescriptor& desc, int i) {
    if (i < 0 || i >= static_cast<int>(desc.c_twists.size()))
        throw MapError(MapErrorCode::BadInput, "twist-circle index out of range");
    Template tmpl = make_template(desc.kind);
    return linking_number(tmpl, i);
}

CurveOnSurface marked_curve(const RefinedComplex& rc, const std::string& name) {
    auto it = rc.base->marked_curves().find(name);
    if (it == rc.base->marked_curves().end())
        throw MapError(MapErrorCode::BadInput, "no marked curve named " + name);
    return curve_from_edges(rc, it->second);
}

FamilyBuild build_family(const FamilyDescriptor& desc, bool strict_powers) {
    if (desc.c_twists.size() % 2 != 0)
        throw MapError(MapErrorCode::TwistTooSmall,
                       "twist circles come in pairs; need an even count");
    for (int t : desc.c_twists)
        if (t < 7) throw MapError(MapErrorCode::TwistTooSmall, "twist-circle power below 7");

    FamilyBuild build{make_template(desc.kind), {}, {}};
    build.twists = desc.twists.empty()
                       ? std::vector<int>(build.tmpl.map.crossings(), 1)
                       : desc.twists;
    if (desc.knotify) build.twists = choose_knot_parity(build.tmpl, build.twists);
    build.diagram = insert_twists(build.tmpl, build.twists);
    apply_handlebody_twists(build.diagram, desc.hb_u, desc.hb_v, desc.hb_w, strict_powers);
    return build;
}

void apply_handlebody_twists(DiagramOnSurface& diagram, int power_u, int power_v,
                             int power_w, bool strict) {
    for (int p : {power_u, power_v, power_w})
        if (p < 8 && strict)
            throw MapError(MapErrorCode::PowerTooSmall, "handlebody twist power below 8");
    RefinedComplex rc = refine(diagram, false);
    CurveOnSurface u = marked_curve(rc, "u");
    CurveOnSurface v = marked_curve(rc, "v");
    CurveOnSurface w = marked_curve(rc, "w");
    for (const char* name : {"x", "y", "z"}) {
        CurveOnSurface c = marked_curve(rc, name);
        c = dehn_twist(c, u, power_u);
        c = dehn_twist(c, v, power_v);
        c = dehn_twist(c, w, power_w);
        diagram.set_marked_curve(name, curve_edges(c));
    }
}

}  // namespace surflink
