#include "surflink/analysis.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <thread>

namespace surflink {

bool is_alternating(const DiagramOnSurface& map) {
    // Along every face walk the strand ends alternate over/under, which
    // holds exactly when every edge joins an over end to an under end.
    for (const auto& walk : map.face_walks())
        for (DartId d : walk)
            if (map.is_over(d) == map.is_over(map.alpha(d))) return false;
    return true;
}

CheckerboardResult checkerboard(const DiagramOnSurface& map) {
    CheckerboardResult res;
    const int n = static_cast<int>(map.regions().size());
    std::vector<std::vector<int>> adj(n);
    for (EdgeId e = 0; e < map.edge_count(); ++e) {
        DartId d = map.edge_dart(e);
        int a = map.region_of_dart(d), b = map.region_of_dart(map.alpha(d));
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<int> colour(n, -1), parent(n, -1);
    for (int start = 0; start < n; ++start) {
        if (colour[start] != -1) continue;
        colour[start] = 0;
        std::deque<int> queue = {start};
        while (!queue.empty()) {
            int r = queue.front();
            queue.pop_front();
            for (int s : adj[r]) {
                if (colour[s] == -1) {
                    colour[s] = 1 - colour[r];
                    parent[s] = r;
                    queue.push_back(s);
                } else if (colour[s] == colour[r]) {
                    // Odd cycle witness: root paths trimmed past their meet.
                    std::vector<int> pa, pb;
                    for (int x = r; x != -1; x = parent[x]) pa.push_back(x);
                    for (int x = s; x != -1; x = parent[x]) pb.push_back(x);
                    while (pa.size() >= 2 && pb.size() >= 2 &&
                           pa[pa.size() - 1] == pb[pb.size() - 1] &&
                           pa[pa.size() - 2] == pb[pb.size() - 2]) {
                        pa.pop_back();
                        pb.pop_back();
                    }
                    res.ok = false;
                    res.odd_cycle_regions = pa;
                    for (int i = static_cast<int>(pb.size()) - 2; i >= 0; --i)
                        res.odd_cycle_regions.push_back(pb[i]);
                    return res;
                }
            }
        }
    }
    res.ok = true;
    res.colouring = std::move(colour);
    return res;
}

std::vector<TwistRegion> twist_regions(const DiagramOnSurface& map) {
    const int nv = map.crossings();
    // Bigons: disc regions whose single walk has length 2 and two
    // distinct crossings.
    struct Bigon {
        VertexId a, b;
        int walk;
    };
    std::vector<Bigon> bigons;
    for (int r = 0; r < static_cast<int>(map.regions().size()); ++r) {
        if (!map.region_is_disc(r)) continue;
        int w = map.regions()[r].walks[0];
        const auto& walk = map.face_walks()[w];
        if (walk.size() != 2) continue;
        VertexId a = map.vertex_of(walk[0]), b = map.vertex_of(walk[1]);
        if (a != b) bigons.push_back({a, b, w});
    }
    std::vector<std::vector<int>> incident(nv);
    for (int i = 0; i < static_cast<int>(bigons.size()); ++i) {
        incident[bigons[i].a].push_back(i);
        incident[bigons[i].b].push_back(i);
    }

    std::vector<TwistRegion> regions;
    std::vector<char> v_seen(nv, 0);
    std::vector<char> b_seen(bigons.size(), 0);
    for (VertexId start = 0; start < nv; ++start) {
        if (v_seen[start]) continue;
        if (incident[start].empty()) {
            v_seen[start] = 1;
            regions.push_back(TwistRegion{{start}, {}, false});
            continue;
        }
        // Collect the chain component.
        std::vector<VertexId> comp;
        std::vector<int> comp_bigons;
        std::vector<VertexId> stack = {start};
        v_seen[start] = 1;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int bi : incident[v]) {
                if (b_seen[bi]) continue;
                b_seen[bi] = 1;
                comp_bigons.push_back(bi);
                VertexId w = bigons[bi].a == v ? bigons[bi].b : bigons[bi].a;
                if (!v_seen[w]) {
                    v_seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        TwistRegion tr;
        bool closed = comp_bigons.size() >= comp.size();
        tr.closed = closed;
        // Order the chain by walking from an endpoint (or the smallest
        // crossing for a closed chain).
        std::map<VertexId, std::vector<int>> local;
        for (int bi : comp_bigons) {
            local[bigons[bi].a].push_back(bi);
            local[bigons[bi].b].push_back(bi);
        }
        VertexId head = -1;
        if (!closed) {
            for (VertexId v : comp)
                if (local[v].size() == 1 && (head == -1 || v < head)) head = v;
        }
        if (head == -1) {
            closed = true;
            tr.closed = true;
            head = *std::min_element(comp.begin(), comp.end());
        }
        std::vector<char> used(bigons.size(), 0);
        VertexId cur = head;
        tr.crossings.push_back(cur);
        bool moved = true;
        while (moved) {
            moved = false;
            for (int bi : local[cur]) {
                if (used[bi]) continue;
                used[bi] = 1;
                VertexId nxt = bigons[bi].a == cur ? bigons[bi].b : bigons[bi].a;
                tr.bigon_walks.push_back(bigons[bi].walk);
                if (nxt == head && closed) {
                    moved = false;
                    break;
                }
                if (std::find(tr.crossings.begin(), tr.crossings.end(), nxt) ==
                    tr.crossings.end())
                    tr.crossings.push_back(nxt);
                cur = nxt;
                moved = true;
                break;
            }
        }
        regions.push_back(std::move(tr));
    }
    std::sort(regions.begin(), regions.end(), [](const TwistRegion& a, const TwistRegion& b) {
        return a.crossings[0] < b.crossings[0];
    });
    return regions;
}

int twist_number(const DiagramOnSurface& map) {
    return static_cast<int>(twist_regions(map).size());
}

int crossing_number(const DiagramOnSurface& map) { return map.crossings(); }

// ---------------------------------------------------------------------------
// Dual-cycle machinery shared by edge_width and the disc checks.

namespace {

std::vector<int> cycle_key(const RefinedComplex& rc, const std::vector<int>& darts) {
    const int m = static_cast<int>(darts.size());
    std::vector<int> best;
    auto consider = [&](const std::vector<int>& cyc) {
        for (int s = 0; s < m; ++s) {
            std::vector<int> rot(m);
            for (int i = 0; i < m; ++i) rot[i] = cyc[(s + i) % m];
            if (best.empty() || rot < best) best = std::move(rot);
        }
    };
    consider(darts);
    std::vector<int> rev(m);
    for (int i = 0; i < m; ++i) rev[i] = rc.alpha(darts[m - 1 - i]);
    consider(rev);
    return best;
}

struct FanPath {
    std::vector<int> darts;   // darts entering each successive face
    std::vector<int> faces;   // visited faces including endpoints
};

// 0-cost adjacency within one region's triangle fan.
struct Fan {
    std::vector<int> faces;                        // region faces
    std::vector<std::vector<std::pair<int, int>>> adj;  // local: (local face, dart)
    std::vector<int> local_of_face;                // -1 outside

    Fan(const RefinedComplex& rc, int region) {
        faces = rc.region_faces[region];
        local_of_face.assign(rc.face_count(), -1);
        for (int i = 0; i < static_cast<int>(faces.size()); ++i) local_of_face[faces[i]] = i;
        adj.resize(faces.size());
        for (int e = 0; e < rc.edge_count(); ++e) {
            if (rc.cost(e) != 0 || rc.edges[e].region != region) continue;
            int x = rc.dart_of(e, 0), y = rc.dart_of(e, 1);
            int fx = rc.face_of[x], fy = rc.face_of[y];
            adj[local_of_face[fy]].push_back({local_of_face[fx], x});  // crossing into fx
            adj[local_of_face[fx]].push_back({local_of_face[fy], y});
        }
        for (auto& v : adj) std::sort(v.begin(), v.end());
    }

    // All simple paths from one face to another; optional whitelist of
    // allowed faces (global ids). Includes the empty path when from==to.
    std::vector<FanPath> simple_paths(int from_face, int to_face,
                                      const std::vector<char>* allowed_global = nullptr,
                                      size_t cap = 4096) const {
        std::vector<FanPath> out;
        int from = local_of_face[from_face], to = local_of_face[to_face];
        if (from < 0 || to < 0) return out;
        std::vector<char> visited(faces.size(), 0);
        FanPath cur;
        cur.faces.push_back(from_face);
        visited[from] = 1;
        auto dfs = [&](auto&& self, int at) -> void {
            if (out.size() >= cap) return;
            if (at == to) {
                out.push_back(cur);
                // Do not return: a longer simple path may revisit `to`?
                // No: simple paths end at first arrival. Stop this branch.
                return;
            }
            for (auto [nxt, dart] : adj[at]) {
                if (visited[nxt]) continue;
                if (allowed_global && !(*allowed_global)[faces[nxt]]) continue;
                visited[nxt] = 1;
                cur.darts.push_back(dart);
                cur.faces.push_back(faces[nxt]);
                self(self, nxt);
                cur.faces.pop_back();
                cur.darts.pop_back();
                visited[nxt] = 0;
            }
        };
        if (allowed_global && !(*allowed_global)[from_face]) return out;
        dfs(dfs, from);
        return out;
    }

    // All simple cycles (as dart lists) in the 0-subgraph.
    std::vector<std::vector<int>> simple_cycles(size_t cap = 4096) const {
        std::vector<std::vector<int>> out;
        const int n = static_cast<int>(faces.size());
        std::vector<char> visited(n, 0);
        std::vector<int> dart_path;
        for (int s = 0; s < n; ++s) {
            auto dfs = [&](auto&& self, int at) -> void {
                if (out.size() >= cap) return;
                for (auto [nxt, dart] : adj[at]) {
                    if (nxt == s) {
                        // Close the cycle; skip immediate backtracks.
                        if (!dart_path.empty() && (dart ^ 1) == dart_path.back()) continue;
                        auto cyc = dart_path;
                        cyc.push_back(dart);
                        out.push_back(std::move(cyc));
                        continue;
                    }
                    if (nxt <= s || visited[nxt]) continue;
                    visited[nxt] = 1;
                    dart_path.push_back(dart);
                    self(self, nxt);
                    dart_path.pop_back();
                    visited[nxt] = 0;
                }
            };
            visited[s] = 1;
            dfs(dfs, s);
            visited[s] = 0;
        }
        return out;
    }
};

struct DualSearch {
    const RefinedComplex& rc;
    std::vector<int> dist;
    std::vector<int> parent_dart;  // dart crossed into each face from its parent

    explicit DualSearch(const RefinedComplex& rc_) : rc(rc_) {}

    void run(int root) {
        const int inf = 1 << 29;
        dist.assign(rc.face_count(), inf);
        parent_dart.assign(rc.face_count(), -1);
        std::deque<int> dq;
        dist[root] = 0;
        dq.push_back(root);
        while (!dq.empty()) {
            int f = dq.front();
            dq.pop_front();
            for (int d : rc.faces[f]) {
                // Crossing edge(d) leaves f into the face on the alpha side.
                int nd = rc.alpha(d);
                int g = rc.face_of[nd];
                int w = rc.cost(rc.edge_of(d));
                if (dist[f] + w < dist[g]) {
                    dist[g] = dist[f] + w;
                    parent_dart[g] = nd;
                    if (w == 0)
                        dq.push_front(g);
                    else
                        dq.push_back(g);
                }
            }
        }
    }

    std::vector<int> path_from_root(int f) const {
        std::vector<int> darts;
        while (parent_dart[f] != -1) {
            darts.push_back(parent_dart[f]);
            f = rc.face_of[rc.alpha(parent_dart[f])];
        }
        std::reverse(darts.begin(), darts.end());
        return darts;
    }
};

}  // namespace

EdgeWidthResult edge_width(const DiagramOnSurface& map, int threads) {
    RefinedComplex rc = refine(map, false);
    const int nf = rc.face_count();
    const int ne = rc.edge_count();

    struct Cand {
        int weight;
        int root;   // -1 marks a region-cycle candidate
        int index;  // edge id, or region-cycle index
    };
    std::vector<Cand> cands;
    std::vector<std::vector<int>> region_cycles;

    for (int r = 0; r < static_cast<int>(map.regions().size()); ++r) {
        Fan fan(rc, r);
        for (auto& cyc : fan.simple_cycles()) {
            cands.push_back({0, -1, static_cast<int>(region_cycles.size())});
            region_cycles.push_back(std::move(cyc));
        }
    }

    threads = std::max(1, threads);
    std::vector<std::vector<Cand>> per_thread(threads);
    {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) {
            pool.emplace_back([&, t]() {
                DualSearch search(rc);
                for (int root = t; root < nf; root += threads) {
                    search.run(root);
                    for (int e = 0; e < ne; ++e) {
                        int u = rc.face_of[rc.dart_of(e, 0)];
                        int v = rc.face_of[rc.dart_of(e, 1)];
                        int w = search.dist[u] + rc.cost(e) + search.dist[v];
                        per_thread[t].push_back({w, root, e});
                    }
                }
            });
        }
        for (auto& th : pool) th.join();
    }
    for (auto& chunk : per_thread)
        cands.insert(cands.end(), chunk.begin(), chunk.end());
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
        if (a.weight != b.weight) return a.weight < b.weight;
        if (a.root != b.root) return a.root < b.root;
        return a.index < b.index;
    });

    std::set<std::vector<int>> seen;
    EdgeWidthResult result;
    int best = -1;
    std::vector<int> best_key;
    DualSearch search(rc);
    int search_root = -1;
    for (const Cand& cand : cands) {
        if (best >= 0 && cand.weight > best) break;
        std::vector<int> darts;
        if (cand.root == -1) {
            darts = region_cycles[cand.index];
        } else {
            if (search_root != cand.root) {
                search.run(cand.root);
                search_root = cand.root;
            }
            int e = cand.index;
            int u = rc.face_of[rc.dart_of(e, 0)];
            darts = search.path_from_root(u);
            darts.push_back(rc.dart_of(e, 1));  // cross from u-side into v-side
            auto down = search.path_from_root(rc.face_of[rc.dart_of(e, 1)]);
            for (auto it = down.rbegin(); it != down.rend(); ++it)
                darts.push_back(rc.alpha(*it));
        }
        CurveOnSurface curve = reduce(CurveOnSurface{&rc, std::move(darts), false});
        if (curve.darts.empty()) continue;
        if (!is_face_simple(curve)) continue;
        int w = curve_weight(curve);
        if (best >= 0 && w > best) continue;
        auto key = cycle_key(rc, curve.darts);
        if (!seen.insert(key).second) continue;
        if (!is_essential(curve).essential) continue;
        if (best < 0 || w < best || (w == best && key < best_key)) {
            best = w;
            best_key = key;
        }
    }
    if (best < 0) return result;  // no essential curve: infinite sentinel
    result.finite = true;
    result.width = best;
    CurveOnSurface cert{&rc, best_key, false};
    result.certificate_edges = curve_edges(cert);
    return result;
}

std::optional<int> edge_width_by_enumeration(const DiagramOnSurface& map, int max_weight) {
    RefinedComplex rc = refine(map, false);
    const int nf = rc.face_count();
    std::optional<int> best;

    std::vector<char> on_path(nf, 0);
    std::vector<int> darts;
    for (int s = 0; s < nf; ++s) {
        auto dfs = [&](auto&& self, int at, int weight) -> void {
            for (int d : rc.faces[at]) {
                int nd = rc.alpha(d);
                int g = rc.face_of[nd];
                int w = weight + rc.cost(rc.edge_of(d));
                if (w > max_weight) continue;
                if (g == s) {
                    darts.push_back(nd);
                    CurveOnSurface curve{&rc, darts, false};
                    auto reduced = reduce(curve);
                    if (!reduced.darts.empty() && is_face_simple(reduced) &&
                        is_essential(reduced).essential) {
                        int cw = curve_weight(reduced);
                        if (!best || cw < *best) best = cw;
                    }
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
    return best;
}

// ---------------------------------------------------------------------------
// Weight-2 and weight-4 disc checks on the split refinement.

namespace {

struct DiscScan {
    const DiagramOnSurface& map;
    RefinedComplex rc;
    std::vector<Fan> fans;
    std::set<std::vector<int>> seen;

    explicit DiscScan(const DiagramOnSurface& m) : map(m), rc(refine(m, true)) {
        for (int r = 0; r < static_cast<int>(map.regions().size()); ++r)
            fans.emplace_back(rc, r);
    }

    bool already_seen(const std::vector<int>& darts) {
        return !seen.insert(cycle_key(rc, darts)).second;
    }

    static bool faces_intersect(const std::vector<int>& a, const std::vector<int>& b) {
        for (int x : a)
            for (int y : b)
                if (x == y) return true;
        return false;
    }
};

std::vector<EdgeId> boundary_map_edges(const RefinedComplex& rc, const std::vector<int>& darts) {
    std::vector<EdgeId> out;
    for (int d : darts) {
        const auto& info = rc.edges[rc.edge_of(d)];
        if (info.kind == RefinedComplex::EdgeKind::Diagram) out.push_back(info.orig_edge);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

DiscCheckResult is_weakly_prime(const DiagramOnSurface& map) {
    DiscCheckResult res;
    const bool sphere = map.genus() == 0;
    if (sphere && map.crossings() < 2) {
        res.ok = false;
        res.witness = WitnessDisc{{}, {}, "TooFewCrossingsOnSphere"};
        return res;
    }

    DiscScan scan(map);
    const RefinedComplex& rc = scan.rc;

    // Flank darts per region: sides of diagram edges facing that region.
    std::vector<std::vector<int>> flanks(map.regions().size());
    for (int e = 0; e < rc.edge_count(); ++e) {
        if (rc.cost(e) == 0) continue;
        for (int s = 0; s < 2; ++s) {
            int d = rc.dart_of(e, s);
            flanks[rc.region_of_face[rc.face_of[d]]].push_back(d);
        }
    }

    for (int r1 = 0; r1 < static_cast<int>(flanks.size()); ++r1) {
        for (int x : flanks[r1]) {
            for (int z : flanks[r1]) {
                if (z == x) continue;  // immediate backtrack
                int y = rc.alpha(z);
                int r2 = rc.region_of_face[rc.face_of[y]];
                if (rc.region_of_face[rc.face_of[rc.alpha(x)]] != r2) continue;
                auto ps = scan.fans[r1].simple_paths(rc.face_of[x], rc.face_of[z]);
                auto qs = scan.fans[r2].simple_paths(rc.face_of[y], rc.face_of[rc.alpha(x)]);
                for (const FanPath& p : ps) {
                    for (const FanPath& q : qs) {
                        if (DiscScan::faces_intersect(p.faces, q.faces)) continue;
                        std::vector<int> darts;
                        darts.push_back(x);
                        darts.insert(darts.end(), p.darts.begin(), p.darts.end());
                        darts.push_back(y);
                        darts.insert(darts.end(), q.darts.begin(), q.darts.end());
                        if (scan.already_seen(darts)) continue;
                        CurveOnSurface curve{&rc, darts, false};
                        CutResult cut = cut_along(curve);
                        if (!cut.has_disc_side) continue;
                        EdgeId o1 = rc.edges[rc.edge_of(x)].orig_edge;
                        EdgeId o2 = rc.edges[rc.edge_of(z)].orig_edge;
                        if (sphere) {
                            // Some side must be a crossing-free arc.
                            size_t least = map.crossings() + 1;
                            const CutProfile* worst = nullptr;
                            for (const CutProfile& c : cut.components) {
                                if (c.crossings.size() < least) least = c.crossings.size();
                                if (!worst || c.crossings.size() < worst->crossings.size())
                                    worst = &c;
                            }
                            if (least > 0) {
                                res.ok = false;
                                res.witness = WitnessDisc{boundary_map_edges(rc, darts),
                                                          worst->crossings,
                                                          "NoCrossingFreeSide"};
                                return res;
                            }
                        } else {
                            for (const CutProfile& c : cut.components) {
                                if (!(c.genus == 0 && c.boundaries == 1)) continue;
                                if (c.crossings.empty()) {
                                    if (o1 != o2)
                                        throw MapError(MapErrorCode::BadInput,
                                                       "crossing-free disc over two edges");
                                    continue;  // bare sub-arc of one edge
                                }
                                res.ok = false;
                                res.witness = WitnessDisc{boundary_map_edges(rc, darts),
                                                          c.crossings,
                                                          "DiscContainsCrossings"};
                                return res;
                            }
                        }
                    }
                }
            }
        }
    }
    res.ok = true;
    return res;
}

namespace {

struct TwistChains {
    std::vector<int> id_of_crossing;
    std::vector<TwistRegion> regions;

    explicit TwistChains(const DiagramOnSurface& map)
        : id_of_crossing(map.crossings(), -1), regions(twist_regions(map)) {
        for (int i = 0; i < static_cast<int>(regions.size()); ++i)
            for (VertexId v : regions[i].crossings) id_of_crossing[v] = i;
    }

    // Crossings strictly between v1 and v2 along the chain; for closed
    // chains both arcs are returned.
    std::vector<std::vector<VertexId>> between(VertexId v1, VertexId v2) const {
        std::vector<std::vector<VertexId>> out;
        int t = id_of_crossing[v1];
        if (t != id_of_crossing[v2]) return out;
        const auto& chain = regions[t].crossings;
        auto pos = [&](VertexId v) {
            return static_cast<int>(std::find(chain.begin(), chain.end(), v) - chain.begin());
        };
        int i = pos(v1), j = pos(v2);
        if (i > j) std::swap(i, j);
        std::vector<VertexId> inner(chain.begin() + i + 1, chain.begin() + j);
        out.push_back(inner);
        if (regions[t].closed) {
            std::vector<VertexId> other(chain.begin() + j + 1, chain.end());
            other.insert(other.end(), chain.begin(), chain.begin() + i);
            out.push_back(other);
        }
        return out;
    }
};

}  // namespace

DiscCheckResult is_twist_reduced(const DiagramOnSurface& map) {
    DiscCheckResult res;
    DiscScan scan(map);
    const RefinedComplex& rc = scan.rc;
    TwistChains chains(map);

    // Outer flank faces: crossing out of the corner across edge(p) or
    // edge(sigma p) lands on the alpha side.
    auto check_candidate = [&](const std::vector<int>& darts, VertexId v1,
                               VertexId v2) -> bool {
        // Returns false (and sets res) when a violating disc is found.
        if (scan.already_seen(darts)) return true;
        CurveOnSurface curve{&rc, darts, false};
        CutResult cut = cut_along(curve);
        if (!cut.has_disc_side) return true;
        auto arcs = chains.between(v1, v2);
        for (const CutProfile& c : cut.components) {
            if (!(c.genus == 0 && c.boundaries == 1)) continue;
            bool pass = false;
            for (const auto& arc : arcs) {
                // Alternative 1: the disc holds exactly the chain between
                // the two crossings (and possibly those crossings).
                std::vector<VertexId> allowed = arc;
                allowed.push_back(v1);
                allowed.push_back(v2);
                std::sort(allowed.begin(), allowed.end());
                bool only_chain = true;
                bool touches_chain = false;
                for (VertexId v : c.crossings) {
                    if (!std::binary_search(allowed.begin(), allowed.end(), v))
                        only_chain = false;
                    if (std::find(arc.begin(), arc.end(), v) != arc.end())
                        touches_chain = true;
                }
                // Alternative 2: the whole chain lies on the other side.
                if (only_chain || !touches_chain) {
                    pass = true;
                    break;
                }
            }
            if (!pass) {
                res.ok = false;
                res.witness = WitnessDisc{boundary_map_edges(rc, darts), c.crossings,
                                          "TwistReducedViolation"};
                return false;
            }
        }
        return true;
    };

    // A boundary meets the diagram four times adjacent to two crossings
    // exactly when the crossed halves pair up, in cyclic order, as two
    // near-v1 points and two near-v2 points; the connecting arcs are
    // unrestricted. Enumerate local passages per crossing and join them
    // by the two long passages.
    auto near_vertex = [&](int side_dart) -> VertexId {
        const auto& info = rc.edges[rc.edge_of(side_dart)];
        DartId d0 = map.edge_dart(info.orig_edge);
        return info.half == 0 ? map.vertex_of(d0) : map.vertex_of(map.alpha(d0));
    };

    // Local passage: enter dart x (crossed into its face), fan path, and
    // the flank z of the second crossed half, both halves near vertex v.
    struct LocalPassage {
        VertexId v;
        int x, z;             // flank darts inside the passage region
        int key_in, key_out;  // regions exposed to the long passages
    };
    std::vector<LocalPassage> locals;
    {
        std::vector<std::vector<int>> flanks(map.regions().size());
        for (int e = 0; e < rc.edge_count(); ++e) {
            if (rc.cost(e) == 0) continue;
            for (int s = 0; s < 2; ++s) {
                int d = rc.dart_of(e, s);
                flanks[rc.region_of_face[rc.face_of[d]]].push_back(d);
            }
        }
        for (int r = 0; r < static_cast<int>(flanks.size()); ++r) {
            for (int x : flanks[r]) {
                for (int z : flanks[r]) {
                    if (x == z || rc.edge_of(x) == rc.edge_of(z)) continue;
                    if (near_vertex(x) != near_vertex(z)) continue;
                    locals.push_back({near_vertex(x), x, z,
                                      rc.region_of_face[rc.face_of[rc.alpha(x)]],
                                      rc.region_of_face[rc.face_of[rc.alpha(z)]]});
                }
            }
        }
    }
    std::map<std::pair<int, int>, std::vector<int>> locals_by_keys;
    for (int i = 0; i < static_cast<int>(locals.size()); ++i)
        locals_by_keys[{locals[i].key_in, locals[i].key_out}].push_back(i);

    for (const LocalPassage& a : locals) {
        // The matching local passage is entered from the region beyond
        // a's exit and leaves into the region beyond a's entry.
        auto it = locals_by_keys.find({a.key_out, a.key_in});
        if (it == locals_by_keys.end()) continue;
        auto pas = scan.fans[rc.region_of_face[rc.face_of[a.x]]].simple_paths(
            rc.face_of[a.x], rc.face_of[a.z]);
        if (pas.empty()) continue;
        for (int bi : it->second) {
            const LocalPassage& b = locals[bi];
            if (b.v <= a.v) continue;  // distinct crossings, once per pair
            auto pbs = scan.fans[rc.region_of_face[rc.face_of[b.x]]].simple_paths(
                rc.face_of[b.x], rc.face_of[b.z]);
            if (pbs.empty()) continue;
            auto longs1 = scan.fans[a.key_out].simple_paths(rc.face_of[rc.alpha(a.z)],
                                                            rc.face_of[rc.alpha(b.x)]);
            auto longs2 = scan.fans[b.key_out].simple_paths(rc.face_of[rc.alpha(b.z)],
                                                            rc.face_of[rc.alpha(a.x)]);
            for (const FanPath& pa : pas) {
                for (const FanPath& pb : pbs) {
                    for (const FanPath& l1 : longs1) {
                        for (const FanPath& l2 : longs2) {
                            std::vector<int> all;
                            for (const auto* fp : {&pa, &pb, &l1, &l2})
                                all.insert(all.end(), fp->faces.begin(), fp->faces.end());
                            std::sort(all.begin(), all.end());
                            if (std::adjacent_find(all.begin(), all.end()) != all.end())
                                continue;
                            std::vector<int> darts;
                            darts.push_back(a.x);
                            darts.insert(darts.end(), pa.darts.begin(), pa.darts.end());
                            darts.push_back(rc.alpha(a.z));
                            darts.insert(darts.end(), l1.darts.begin(), l1.darts.end());
                            darts.push_back(b.x);
                            darts.insert(darts.end(), pb.darts.begin(), pb.darts.end());
                            darts.push_back(rc.alpha(b.z));
                            darts.insert(darts.end(), l2.darts.begin(), l2.darts.end());
                            if (!check_candidate(darts, a.v, b.v)) return res;
                        }
                    }
                }
            }
        }
    }
    res.ok = true;
    return res;
}

RepresentativityResult representativity_over(const DiagramOnSurface& map,
                                             const std::vector<CurveOnSurface>& curves) {
    RepresentativityResult res;
    for (int i = 0; i < static_cast<int>(curves.size()); ++i) {
        CurveOnSurface reduced = reduce(curves[i]);
        if (!reduced.essential_image) {
            if (!is_face_simple(reduced))
                throw MapError(MapErrorCode::NonSimpleCurve,
                               "curve " + std::to_string(i) + " is not simple");
            if (!is_essential(reduced).essential)
                throw MapError(MapErrorCode::InessentialCurve,
                               "curve " + std::to_string(i) + " bounds a disc");
        }
        int w = curve_weight(reduced);
        if (!res.finite || w < res.value) {
            res.finite = true;
            res.value = w;
            res.argmin = i;
        }
    }
    return res;
}

}  // namespace surflink
