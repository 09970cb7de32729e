#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "surflink/analysis.hpp"
#include "surflink/curves.hpp"
#include "surflink/refined_complex.hpp"

namespace oracles {

using namespace surflink;

/// Every vertex-simple dual cycle of weight at most `cap`, by raw DFS on
/// the split refinement. Small maps only.
inline std::vector<std::vector<int>> all_simple_cycles(const RefinedComplex& rc, int cap) {
    std::vector<std::vector<int>> out;
    std::set<std::vector<int>> seen;
    std::vector<char> on_path(rc.face_count(), 0);
    std::vector<int> darts;
    auto canonical = [&](std::vector<int> c) {
        const int m = static_cast<int>(c.size());
        std::vector<int> best;
        auto consider = [&](const std::vector<int>& cyc) {
            for (int s = 0; s < m; ++s) {
                std::vector<int> rot(m);
                for (int i = 0; i < m; ++i) rot[i] = cyc[(s + i) % m];
                if (best.empty() || rot < best) best = rot;
            }
        };
        consider(c);
        std::vector<int> rev(m);
        for (int i = 0; i < m; ++i) rev[i] = rc.alpha(c[m - 1 - i]);
        consider(rev);
        return best;
    };
    for (int s = 0; s < rc.face_count(); ++s) {
        auto dfs = [&](auto&& self, int at, int weight) -> void {
            for (int d : rc.faces[at]) {
                int nd = rc.alpha(d);
                int g = rc.face_of[nd];
                int w = weight + rc.cost(rc.edge_of(d));
                if (w > cap) continue;
                if (g == s) {
                    darts.push_back(nd);
                    CurveOnSurface c{&rc, darts, false};
                    auto r = reduce(c);
                    if (!r.darts.empty() && is_face_simple(r) &&
                        seen.insert(canonical(r.darts)).second)
                        out.push_back(r.darts);
                    darts.pop_back();
                    continue;
                }
                if (g <= s || on_path[g]) continue;
                on_path[g] = 1;
                darts.push_back(nd);
                self(self, g, w);
                darts.pop_back();
                on_path[g] = 0;
            }
        };
        on_path[s] = 1;
        dfs(dfs, s, 0);
        on_path[s] = 0;
    }
    return out;
}

/// Naive weak-primeness check over all simple weight-2 dual cycles.
inline bool naive_weakly_prime(const DiagramOnSurface& map) {
    if (map.genus() == 0 && map.crossings() < 2) return false;
    RefinedComplex rc = refine(map, true);
    for (const auto& darts : all_simple_cycles(rc, 2)) {
        CurveOnSurface curve{&rc, darts, false};
        if (curve_weight(curve) != 2) continue;
        CutResult cut = cut_along(curve);
        if (!cut.has_disc_side) continue;
        std::vector<EdgeId> crossed;
        for (int d : darts) {
            const auto& info = rc.edges[rc.edge_of(d)];
            if (info.kind == RefinedComplex::EdgeKind::Diagram)
                crossed.push_back(info.orig_edge);
        }
        if (map.genus() == 0) {
            size_t least = map.crossings() + 1;
            for (const auto& c : cut.components) least = std::min(least, c.crossings.size());
            if (least > 0) return false;
        } else {
            for (const auto& c : cut.components) {
                if (!(c.genus == 0 && c.boundaries == 1)) continue;
                if (!c.crossings.empty()) return false;
            }
        }
    }
    return true;
}

/// Naive twist-reducedness over all simple weight-4 dual cycles whose
/// four crossings hug two distinct diagram crossings.
inline bool naive_twist_reduced(const DiagramOnSurface& map) {
    RefinedComplex rc = refine(map, true);
    auto regions = twist_regions(map);
    std::vector<int> chain_of(map.crossings(), -1);
    for (int i = 0; i < static_cast<int>(regions.size()); ++i)
        for (VertexId v : regions[i].crossings) chain_of[v] = i;
    auto between = [&](VertexId v1, VertexId v2) {
        std::vector<std::vector<VertexId>> out;
        if (chain_of[v1] != chain_of[v2]) return out;
        const auto& chain = regions[chain_of[v1]].crossings;
        int i = static_cast<int>(std::find(chain.begin(), chain.end(), v1) - chain.begin());
        int j = static_cast<int>(std::find(chain.begin(), chain.end(), v2) - chain.begin());
        if (i > j) std::swap(i, j);
        out.push_back(std::vector<VertexId>(chain.begin() + i + 1, chain.begin() + j));
        if (regions[chain_of[v1]].closed) {
            std::vector<VertexId> other(chain.begin() + j + 1, chain.end());
            other.insert(other.end(), chain.begin(), chain.begin() + i);
            out.push_back(other);
        }
        return out;
    };

    for (const auto& darts : all_simple_cycles(rc, 4)) {
        CurveOnSurface curve{&rc, darts, false};
        if (curve_weight(curve) != 4) continue;
        const int m = static_cast<int>(darts.size());
        // Passages between consecutive diagram crossings.
        std::vector<int> heavy;
        for (int i = 0; i < m; ++i)
            if (rc.is_diagram_dart(darts[i])) heavy.push_back(i);
        if (heavy.size() != 4) continue;
        // The boundary is adjacent to two crossings when the crossed
        // halves pair up in cyclic order as near-v1, near-v1, near-v2,
        // near-v2; a crossing point on the far half of an edge end is
        // isotopic to one on the near half with the same disc content.
        auto near_vertex = [&](int dart) -> VertexId {
            const auto& info = rc.edges[rc.edge_of(dart)];
            DartId d0 = map.edge_dart(info.orig_edge);
            return info.half == 0 ? map.vertex_of(d0) : map.vertex_of(map.alpha(d0));
        };
        for (int rot = 0; rot < 4; ++rot) {
            VertexId v1 = near_vertex(darts[heavy[rot]]);
            VertexId v2 = near_vertex(darts[heavy[(rot + 2) % 4]]);
            {
                {
                    if (near_vertex(darts[heavy[(rot + 1) % 4]]) != v1) continue;
                    if (near_vertex(darts[heavy[(rot + 3) % 4]]) != v2) continue;
                    if (v1 == v2) continue;
                    CutResult cut = cut_along(curve);
                    if (!cut.has_disc_side) continue;
                    auto arcs = between(v1, v2);
                    for (const auto& comp : cut.components) {
                        if (!(comp.genus == 0 && comp.boundaries == 1)) continue;
                        bool pass = false;
                        for (const auto& arc : arcs) {
                            std::vector<VertexId> allowed = arc;
                            allowed.push_back(v1);
                            allowed.push_back(v2);
                            std::sort(allowed.begin(), allowed.end());
                            bool only_chain = true, touches = false;
                            for (VertexId v : comp.crossings) {
                                if (!std::binary_search(allowed.begin(), allowed.end(), v))
                                    only_chain = false;
                                if (std::find(arc.begin(), arc.end(), v) != arc.end())
                                    touches = true;
                            }
                            if (only_chain || !touches) {
                                pass = true;
                                break;
                            }
                        }
                        if (!pass) return false;
                    }
                }
            }
        }
    }
    return true;
}

}  // namespace oracles
