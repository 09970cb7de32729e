#include "surflink/curves.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace surflink {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

CurveOnSurface make_curve(const RefinedComplex& rc, std::vector<int> darts) {
    if (darts.empty())
        throw MapError(MapErrorCode::BadInput, "empty curve");
    const int m = static_cast<int>(darts.size());
    for (int i = 0; i < m; ++i) {
        int d = darts[i];
        if (d < 0 || d >= rc.dart_count())
            throw MapError(MapErrorCode::CurveNotOnThisMap, "dart out of range");
        int next = darts[(i + 1) % m];
        if (rc.face_of[rc.alpha(next)] != rc.face_of[d])
            throw MapError(MapErrorCode::CurveNotOnThisMap,
                           "consecutive crossings do not share a face");
    }
    return CurveOnSurface{&rc, std::move(darts), false};
}

CurveOnSurface reduce(CurveOnSurface curve) {
    auto& d = curve.darts;
    bool changed = true;
    while (changed && d.size() >= 2) {
        changed = false;
        const int m = static_cast<int>(d.size());
        for (int i = 0; i < m; ++i) {
            int j = (i + 1) % m;
            if (d[j] == (d[i] ^ 1)) {
                if (j > i) {
                    d.erase(d.begin() + j);
                    d.erase(d.begin() + i);
                } else {  // wrap: j == 0
                    d.erase(d.begin() + i);
                    d.erase(d.begin());
                }
                changed = true;
                break;
            }
        }
    }
    return curve;
}

int curve_weight(const CurveOnSurface& curve) {
    int w = 0;
    for (int d : curve.darts) w += curve.rc->cost(curve.rc->edge_of(d));
    return w;
}

int intersection_count(const CurveOnSurface& curve, const DiagramOnSurface& map) {
    if (curve.rc == nullptr || curve.rc->base != &map)
        throw MapError(MapErrorCode::CurveNotOnThisMap, "curve was built on another map");
    return curve_weight(reduce(curve));
}

bool is_face_simple(const CurveOnSurface& curve) {
    std::vector<int> faces;
    faces.reserve(curve.darts.size());
    for (int d : curve.darts) faces.push_back(curve.rc->face_of[d]);
    std::sort(faces.begin(), faces.end());
    return std::adjacent_find(faces.begin(), faces.end()) == faces.end();
}

CutResult cut_along(const CurveOnSurface& input) {
    const RefinedComplex& rc = *input.rc;
    CurveOnSurface curve = reduce(input);
    if (curve.darts.empty())
        throw MapError(MapErrorCode::NonSimpleCurve, "curve reduces to nothing");
    if (!is_face_simple(curve))
        throw MapError(MapErrorCode::NonSimpleCurve, "curve is not simple");

    const int m = static_cast<int>(curve.darts.size());
    // Per crossed face: entry side-dart a and exit side-dart b.
    std::vector<int> entry_of_face(rc.face_count(), -1), exit_of_face(rc.face_count(), -1);
    std::vector<char> edge_crossed(rc.edge_count(), 0);
    for (int i = 0; i < m; ++i) {
        int a = curve.darts[i];
        int b = rc.alpha(curve.darts[(i + 1) % m]);
        entry_of_face[rc.face_of[a]] = a;
        exit_of_face[rc.face_of[a]] = b;
        edge_crossed[rc.edge_of(a)] = 1;
    }

    // Tokens: 2f = piece A (between entry and exit in phi order), 2f+1 =
    // piece B; uncrossed faces use 2f.
    enum Half { First = 0, Second = 1 };
    auto token_of_half = [&](int dart, int half) -> int {
        int f = rc.face_of[dart];
        int a = entry_of_face[f];
        if (a == -1) return 2 * f;
        int b = exit_of_face[f];
        if (dart == a) return half == Second ? 2 * f : 2 * f + 1;
        if (dart == b) return half == First ? 2 * f : 2 * f + 1;
        // Interior darts: in A iff strictly between a and b in phi order.
        for (int cur = rc.phi[a]; cur != b; cur = rc.phi[cur])
            if (cur == dart) return 2 * f;
        return 2 * f + 1;
    };

    UnionFind uf(2 * rc.face_count());
    for (int e = 0; e < rc.edge_count(); ++e) {
        int x = rc.dart_of(e, 0), y = rc.dart_of(e, 1);
        if (!edge_crossed[e]) {
            uf.unite(token_of_half(x, First), token_of_half(y, First));
        } else {
            // The crossing point splits the edge; first half of one side
            // is the second half of the other.
            uf.unite(token_of_half(x, First), token_of_half(y, Second));
            uf.unite(token_of_half(x, Second), token_of_half(y, First));
        }
    }

    // Collect live tokens and component ids.
    std::map<int, int> comp_of_root;
    auto comp = [&](int token) {
        int root = uf.find(token);
        auto it = comp_of_root.find(root);
        if (it == comp_of_root.end())
            it = comp_of_root.emplace(root, static_cast<int>(comp_of_root.size())).first;
        return it->second;
    };

    std::vector<long> V, E, F;
    auto bump = [&](std::vector<long>& vec, int c, long amount) {
        if (c >= static_cast<int>(vec.size())) {
            V.resize(c + 1, 0);
            E.resize(c + 1, 0);
            F.resize(c + 1, 0);
        }
        vec[c] += amount;
    };

    // Faces.
    for (int f = 0; f < rc.face_count(); ++f) {
        bump(F, comp(2 * f), 1);
        if (entry_of_face[f] != -1) bump(F, comp(2 * f + 1), 1);
    }
    // Edges: uncrossed whole; crossed as two sub-segments plus two chord
    // sides per crossed face.
    for (int e = 0; e < rc.edge_count(); ++e) {
        int x = rc.dart_of(e, 0);
        if (!edge_crossed[e]) {
            bump(E, comp(token_of_half(x, First)), 1);
        } else {
            bump(E, comp(token_of_half(x, First)), 1);
            bump(E, comp(token_of_half(x, Second)), 1);
        }
    }
    for (int i = 0; i < m; ++i) {
        int f = rc.face_of[curve.darts[i]];
        bump(E, comp(2 * f), 1);      // chord side in piece A
        bump(E, comp(2 * f + 1), 1);  // chord side in piece B
    }
    // Vertices: refined vertices keep one copy; each crossing point gets
    // one copy per side.
    {
        std::vector<char> seen(rc.vertex_count, 0);
        for (int d = 0; d < rc.dart_count(); ++d) {
            int v = rc.vertex_of[d];
            if (seen[v]) continue;
            seen[v] = 1;
            bump(V, comp(token_of_half(d, First)), 1);
        }
    }
    for (int i = 0; i < m; ++i) {
        int a = curve.darts[i];
        bump(V, comp(token_of_half(a, First)), 1);
        bump(V, comp(token_of_half(a, Second)), 1);
    }

    // The two boundary circles follow the A-pieces and the B-pieces.
    int f0 = rc.face_of[curve.darts[0]];
    int circleA = comp(2 * f0), circleB = comp(2 * f0 + 1);
    std::vector<int> boundary_count(V.size(), 0);
    boundary_count[circleA] += 1;
    boundary_count[circleB] += 1;

    CutResult result;
    long chi_total = 0;
    std::vector<std::vector<VertexId>> content(V.size());
    for (VertexId v = 0; v < rc.base->crossings(); ++v) {
        int rv = rc.vertex_of_crossing[v];
        // Any dart with this origin vertex identifies the component.
        for (int d = 0; d < rc.dart_count(); ++d) {
            if (rc.vertex_of[d] == rv) {
                content[comp(token_of_half(d, First))].push_back(v);
                break;
            }
        }
    }
    for (size_t c = 0; c < V.size(); ++c) {
        long chi = V[c] - E[c] + F[c];
        chi_total += chi;
        int b = boundary_count[c];
        long twog = 2 - b - chi;
        if (twog < 0 || twog % 2 != 0)
            throw MapError(MapErrorCode::BadInput,
                           "cut produced a non-surface piece (internal error)");
        CutProfile p;
        p.genus = static_cast<int>(twog / 2);
        p.boundaries = b;
        p.crossings = std::move(content[c]);
        if (p.genus == 0 && p.boundaries == 1) result.has_disc_side = true;
        result.components.push_back(std::move(p));
    }
    if (chi_total != rc.base->euler_characteristic())
        throw MapError(MapErrorCode::BadInput, "cut changed Euler characteristic");
    std::sort(result.components.begin(), result.components.end(),
              [](const CutProfile& a, const CutProfile& b) {
                  if (a.genus != b.genus) return a.genus < b.genus;
                  if (a.boundaries != b.boundaries) return a.boundaries < b.boundaries;
                  return a.crossings.size() < b.crossings.size();
              });
    return result;
}

EssentialityResult is_essential(const CurveOnSurface& curve) {
    EssentialityResult r;
    CurveOnSurface reduced = reduce(curve);
    if (reduced.darts.empty()) return r;  // contractible within a face
    r.certificate = cut_along(reduced);
    r.essential = !r.certificate.has_disc_side;
    return r;
}

namespace {

struct Passage {
    int index;      // passage order along the curve
    int entry;      // side dart crossed into the face
    int exit;       // side dart crossed leaving the face
};

// Boundary coordinate of a crossing point inside a triangle: (side
// position within the face walk, point position along the edge in the
// walk direction).
struct BoundaryCoord {
    int side;
    long pos;
    bool operator<(const BoundaryCoord& o) const {
        return side != o.side ? side < o.side : pos < o.pos;
    }
    bool operator==(const BoundaryCoord& o) const { return side == o.side && pos == o.pos; }
};

bool chords_cross(BoundaryCoord a1, BoundaryCoord a2, BoundaryCoord b1, BoundaryCoord b2) {
    // Strict interleaving around the cyclic boundary order.
    std::vector<std::pair<BoundaryCoord, int>> pts = {{a1, 0}, {a2, 0}, {b1, 1}, {b2, 1}};
    std::sort(pts.begin(), pts.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    for (int i = 0; i < 3; ++i)
        if (pts[i].first == pts[i + 1].first) return false;  // shared point: keep apart
    return pts[0].second != pts[1].second && pts[1].second != pts[2].second;
}

// Point positions along each refined edge: `along` gets position 0 on
// every edge it crosses, target passages get 1 + passage index.
long point_pos(bool is_along, int passage_index) {
    return is_along ? 0 : 1 + passage_index;
}

BoundaryCoord coord_in_face(const RefinedComplex& rc, int face, int side_dart, long pos_on_edge,
                            long points_on_edge_hint) {
    const auto& tri = rc.faces[face];
    int side = -1;
    for (int i = 0; i < 3; ++i)
        if (tri[i] == side_dart) side = i;
    // Walk direction along this side: dart_of(edge,0) is canonical.
    bool canonical = (side_dart % 2) == 0;
    long pos = canonical ? pos_on_edge : (points_on_edge_hint - 1 - pos_on_edge);
    return {side, pos};
}

}  // namespace

int transverse_crossings(const CurveOnSurface& a, const CurveOnSurface& b) {
    if (a.rc != b.rc)
        throw MapError(MapErrorCode::CurvesOnDifferentMaps, "curves live on different maps");
    const RefinedComplex& rc = *a.rc;
    CurveOnSurface ra = reduce(a), rb = reduce(b);
    if (ra.darts.empty() || rb.darts.empty()) return 0;

    const long kPoints = 2 + static_cast<long>(ra.darts.size()) + rb.darts.size();
    auto passages = [&](const CurveOnSurface& c) {
        std::vector<Passage> out;
        const int m = static_cast<int>(c.darts.size());
        for (int i = 0; i < m; ++i)
            out.push_back({i, c.darts[i], rc.alpha(c.darts[(i + 1) % m])});
        return out;
    };
    std::vector<Passage> pa = passages(ra), pb = passages(rb);
    std::vector<std::vector<int>> by_face(rc.face_count());
    for (int i = 0; i < static_cast<int>(pb.size()); ++i)
        by_face[rc.face_of[pb[i].entry]].push_back(i);

    int crossings = 0;
    for (const Passage& t : pa) {
        int f = rc.face_of[t.entry];
        for (int j : by_face[f]) {
            const Passage& s = pb[j];
            BoundaryCoord t1 = coord_in_face(rc, f, t.entry, point_pos(false, t.index), kPoints);
            BoundaryCoord t2 = coord_in_face(rc, f, t.exit, point_pos(false, t.index), kPoints);
            BoundaryCoord s1 = coord_in_face(rc, f, s.entry, point_pos(true, s.index), kPoints);
            BoundaryCoord s2 = coord_in_face(rc, f, s.exit, point_pos(true, s.index), kPoints);
            if (chords_cross(t1, t2, s1, s2)) ++crossings;
        }
    }
    return crossings;
}

CurveOnSurface dehn_twist(const CurveOnSurface& target, const CurveOnSurface& along,
                          int power) {
    if (target.rc != along.rc)
        throw MapError(MapErrorCode::CurvesOnDifferentMaps, "curves live on different maps");
    const RefinedComplex& rc = *target.rc;
    CurveOnSurface a = reduce(along);
    if (!is_face_simple(a))
        throw MapError(MapErrorCode::NonSimpleCurve, "twisting curve must be simple");
    EssentialityResult ess = is_essential(a);
    if (!ess.essential)
        throw MapError(MapErrorCode::InessentialCurve, "twisting curve must be essential");
    CurveOnSurface t = reduce(target);
    if (power == 0 || t.darts.empty()) return t;

    const int ma = static_cast<int>(a.darts.size());
    // Face -> along-passage (entry index into a.darts).
    std::vector<int> along_passage(rc.face_count(), -1);
    for (int j = 0; j < ma; ++j) along_passage[rc.face_of[a.darts[j]]] = j;

    const long kPoints = 2 + static_cast<long>(t.darts.size()) + a.darts.size();
    const int mt = static_cast<int>(t.darts.size());
    std::vector<int> result;
    for (int i = 0; i < mt; ++i) {
        int entry = t.darts[i];
        int exit = rc.alpha(t.darts[(i + 1) % mt]);
        int f = rc.face_of[entry];
        result.push_back(entry);
        int j = along_passage[f];
        if (j < 0) continue;
        int a_entry = a.darts[j];
        int a_exit = rc.alpha(a.darts[(j + 1) % ma]);
        BoundaryCoord t1 = coord_in_face(rc, f, entry, point_pos(false, i), kPoints);
        BoundaryCoord t2 = coord_in_face(rc, f, exit, point_pos(false, i), kPoints);
        BoundaryCoord s1 = coord_in_face(rc, f, a_entry, point_pos(true, j), kPoints);
        BoundaryCoord s2 = coord_in_face(rc, f, a_exit, point_pos(true, j), kPoints);
        if (!chords_cross(t1, t2, s1, s2)) continue;
        // Splice |power| loops of `along`, forward or backward.
        for (int rep = 0; rep < std::abs(power); ++rep) {
            if (power > 0) {
                for (int k = 1; k <= ma; ++k) result.push_back(a.darts[(j + k) % ma]);
            } else {
                for (int k = 0; k < ma; ++k)
                    result.push_back(rc.alpha(a.darts[(j - k + ma) % ma]));
            }
        }
    }
    CurveOnSurface spliced = make_curve(rc, std::move(result));
    spliced.essential_image =
        target.essential_image || (is_face_simple(t) && is_essential(t).essential);
    return reduce(spliced);
}

std::vector<int> curve_edges(const CurveOnSurface& curve) {
    std::vector<int> edges;
    edges.reserve(curve.darts.size());
    for (int d : curve.darts) edges.push_back(curve.rc->edge_of(d));
    return edges;
}

CurveOnSurface curve_from_edges(const RefinedComplex& rc, const std::vector<int>& edges) {
    if (edges.empty()) throw MapError(MapErrorCode::BadInput, "empty curve");
    const int m = static_cast<int>(edges.size());
    for (int e : edges)
        if (e < 0 || e >= rc.edge_count())
            throw MapError(MapErrorCode::CurveNotOnThisMap, "edge id out of range");

    // Backtracking over side choices, trying side 0 first; the first
    // complete solution is the lexicographically smallest realization.
    std::vector<int> cur;
    auto dfs = [&](auto&& self, int i) -> bool {
        if (i == m)
            return rc.face_of[rc.alpha(cur[0])] == rc.face_of[cur[m - 1]];
        for (int side = 0; side < 2; ++side) {
            int d = rc.dart_of(edges[i], side);
            if (i > 0 && rc.face_of[rc.alpha(d)] != rc.face_of[cur[i - 1]]) continue;
            cur.push_back(d);
            if (self(self, i + 1)) return true;
            cur.pop_back();
        }
        return false;
    };
    if (!dfs(dfs, 0))
        throw MapError(MapErrorCode::CurveNotOnThisMap,
                       "edge cycle cannot be realized as a curve");
    return make_curve(rc, std::move(cur));
}

}  // namespace surflink
