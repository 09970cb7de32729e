#include "surflink/surface_map.hpp"

#include <algorithm>
#include <numeric>

namespace surflink {

const char* to_string(MapErrorCode code) {
    switch (code) {
        case MapErrorCode::NonQuadrivalent: return "NonQuadrivalent";
        case MapErrorCode::AlphaNotInvolution: return "AlphaNotInvolution";
        case MapErrorCode::DisconnectedGraph: return "DisconnectedGraph";
        case MapErrorCode::EulerMismatch: return "EulerMismatch";
        case MapErrorCode::OrphanFaceWalk: return "OrphanFaceWalk";
        case MapErrorCode::NonSimpleCurve: return "NonSimpleCurve";
        case MapErrorCode::CurvesOnDifferentMaps: return "CurvesOnDifferentMaps";
        case MapErrorCode::CurveNotOnThisMap: return "CurveNotOnThisMap";
        case MapErrorCode::InessentialCurve: return "InessentialCurve";
        case MapErrorCode::InvalidAssignment: return "InvalidAssignment";
        case MapErrorCode::NoKnotParityFound: return "NoKnotParityFound";
        case MapErrorCode::PowerTooSmall: return "PowerTooSmall";
        case MapErrorCode::TwistTooSmall: return "TwistTooSmall";
        case MapErrorCode::InvalidTwist: return "InvalidTwist";
        case MapErrorCode::InvalidCrossingNumber: return "InvalidCrossingNumber";
        case MapErrorCode::DensityUndefined: return "DensityUndefined";
        case MapErrorCode::BadInput: return "BadInput";
    }
    return "Unknown";
}

bool DiagramOnSurface::is_over(DartId d) const {
    // Pair parity: position of d in the sigma-cycle starting at 4v.
    VertexId v = vertex_of(d);
    DartId base = 4 * v;
    int pos = 0;
    DartId cur = base;
    while (cur != d) {
        cur = sigma_[cur];
        ++pos;
    }
    bool even_pair = (pos % 2 == 0);
    return even_pair == over_even_pair_[v];
}

DiagramOnSurface build_map(std::vector<DartId> sigma,
                           std::vector<DartId> alpha,
                           std::vector<bool> over_even_pair,
                           std::vector<Region> regions,
                           std::map<std::string, std::vector<int>> marked) {
    const int n = static_cast<int>(sigma.size());
    if (n == 0 || n % 4 != 0 || alpha.size() != sigma.size())
        throw MapError(MapErrorCode::BadInput, "dart tables must be nonempty and 4-aligned");
    const int nv = n / 4;
    if (static_cast<int>(over_even_pair.size()) != nv)
        throw MapError(MapErrorCode::BadInput, "over_even_pair must have one bit per crossing");

    auto in_range = [&](DartId d) { return d >= 0 && d < n; };
    for (DartId d = 0; d < n; ++d) {
        if (!in_range(sigma[d]) || !in_range(alpha[d]))
            throw MapError(MapErrorCode::BadInput, "dart index out of range");
    }

    // sigma: every block {4v..4v+3} is one 4-cycle.
    for (VertexId v = 0; v < nv; ++v) {
        DartId base = 4 * v;
        DartId cur = base;
        for (int i = 0; i < 4; ++i) {
            if (cur / 4 != v)
                throw MapError(MapErrorCode::NonQuadrivalent,
                               "sigma does not preserve the dart block of crossing " +
                                   std::to_string(v));
            cur = sigma[cur];
        }
        if (cur != base)
            throw MapError(MapErrorCode::NonQuadrivalent,
                           "sigma cycle at crossing " + std::to_string(v) +
                               " does not have length 4");
        // Single cycle through all four darts.
        bool seen[4] = {false, false, false, false};
        cur = base;
        for (int i = 0; i < 4; ++i) {
            seen[cur % 4] = true;
            cur = sigma[cur];
        }
        if (!(seen[0] && seen[1] && seen[2] && seen[3]))
            throw MapError(MapErrorCode::NonQuadrivalent,
                           "sigma block at crossing " + std::to_string(v) +
                               " splits into shorter cycles");
    }

    for (DartId d = 0; d < n; ++d) {
        if (alpha[d] == d || alpha[alpha[d]] != d)
            throw MapError(MapErrorCode::AlphaNotInvolution,
                           "alpha is not a fixed-point-free involution at dart " +
                               std::to_string(d));
    }

    // Connectivity on crossings through edges.
    {
        std::vector<char> seen(nv, 0);
        std::vector<VertexId> stack = {0};
        seen[0] = 1;
        int count = 1;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (int i = 0; i < 4; ++i) {
                VertexId w = alpha[4 * v + i] / 4;
                if (!seen[w]) {
                    seen[w] = 1;
                    ++count;
                    stack.push_back(w);
                }
            }
        }
        if (count != nv)
            throw MapError(MapErrorCode::DisconnectedGraph,
                           "diagram graph is disconnected");
    }

    DiagramOnSurface m;
    m.sigma_ = std::move(sigma);
    m.alpha_ = std::move(alpha);
    m.over_even_pair_ = std::move(over_even_pair);
    m.sigma_inv_.assign(n, 0);
    for (DartId d = 0; d < n; ++d) m.sigma_inv_[m.sigma_[d]] = d;

    // Face walks: orbits of phi = sigma∘alpha, each started at its
    // smallest dart, listed by that dart.
    m.walk_of_dart_.assign(n, -1);
    for (DartId d = 0; d < n; ++d) {
        if (m.walk_of_dart_[d] != -1) continue;
        DartId least = d;
        DartId cur = d;
        do {
            least = std::min(least, cur);
            cur = m.sigma_[m.alpha_[cur]];
        } while (cur != d);
        if (least != d) continue;  // revisit later from its least dart
        std::vector<DartId> walk;
        cur = d;
        do {
            walk.push_back(cur);
            m.walk_of_dart_[cur] = static_cast<int>(m.walks_.size());
            cur = m.sigma_[m.alpha_[cur]];
        } while (cur != d);
        m.walks_.push_back(std::move(walk));
    }
    // Second pass for orbits whose least dart was found late.
    for (DartId d = 0; d < n; ++d) {
        if (m.walk_of_dart_[d] != -1) continue;
        std::vector<DartId> walk;
        DartId least = d;
        DartId cur = d;
        do {
            least = std::min(least, cur);
            cur = m.sigma_[m.alpha_[cur]];
        } while (cur != d);
        cur = least;
        do {
            walk.push_back(cur);
            m.walk_of_dart_[cur] = static_cast<int>(m.walks_.size());
            cur = m.sigma_[m.alpha_[cur]];
        } while (cur != least);
        m.walks_.push_back(std::move(walk));
    }
    // Order walks by smallest (= first) dart.
    {
        std::vector<int> order(m.walks_.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return m.walks_[a][0] < m.walks_[b][0];
        });
        std::vector<std::vector<DartId>> sorted;
        sorted.reserve(m.walks_.size());
        std::vector<int> new_index(m.walks_.size());
        for (int i = 0; i < static_cast<int>(order.size()); ++i) {
            new_index[order[i]] = i;
            sorted.push_back(std::move(m.walks_[order[i]]));
        }
        m.walks_ = std::move(sorted);
        for (DartId d = 0; d < n; ++d) m.walk_of_dart_[d] = new_index[m.walk_of_dart_[d]];
    }

    const int nw = static_cast<int>(m.walks_.size());
    if (regions.empty()) {
        regions.reserve(nw);
        for (int w = 0; w < nw; ++w) regions.push_back(Region{{w}, 0});
    }
    std::vector<int> walk_region(nw, -1);
    for (int r = 0; r < static_cast<int>(regions.size()); ++r) {
        if (regions[r].genus < 0 || regions[r].walks.empty())
            throw MapError(MapErrorCode::BadInput, "region with negative genus or no walks");
        for (int w : regions[r].walks) {
            if (w < 0 || w >= nw || walk_region[w] != -1)
                throw MapError(MapErrorCode::OrphanFaceWalk,
                               "face walk missing from or repeated in region assignment");
            walk_region[w] = r;
        }
    }
    for (int w = 0; w < nw; ++w)
        if (walk_region[w] == -1)
            throw MapError(MapErrorCode::OrphanFaceWalk,
                           "face walk " + std::to_string(w) + " not assigned to a region");

    long chi = nv - n / 2;  // V - E
    for (const Region& r : regions)
        chi += 2 - 2 * r.genus - static_cast<long>(r.walks.size());
    if (chi > 2 || chi % 2 != 0)
        throw MapError(MapErrorCode::EulerMismatch,
                       "region genera inconsistent with an orientable closed surface (chi=" +
                           std::to_string(chi) + ")");
    m.genus_ = static_cast<int>((2 - chi) / 2);
    m.regions_ = std::move(regions);
    m.region_of_walk_ = std::move(walk_region);

    // Edge numbering by smaller dart.
    m.edge_of_.assign(n, -1);
    for (DartId d = 0; d < n; ++d) {
        if (d < m.alpha_[d]) {
            m.edge_of_[d] = static_cast<EdgeId>(m.edge_dart_.size());
            m.edge_dart_.push_back(d);
        }
    }
    for (DartId d = 0; d < n; ++d)
        if (m.edge_of_[d] == -1) m.edge_of_[d] = m.edge_of_[m.alpha_[d]];

    m.marked_ = std::move(marked);
    return m;
}

int link_components(const DiagramOnSurface& map) {
    const int n = map.dart_count();
    std::vector<char> seen(n, 0);
    int orbits = 0;
    for (DartId d = 0; d < n; ++d) {
        if (seen[d]) continue;
        ++orbits;
        DartId cur = d;
        do {
            seen[cur] = 1;
            cur = map.alpha(map.sigma(map.sigma(cur)));
        } while (cur != d);
    }
    return orbits / 2;
}

RegionDual region_dual(const DiagramOnSurface& map) {
    RegionDual dual;
    dual.nodes = static_cast<int>(map.regions().size());
    dual.arcs.reserve(map.edge_count());
    for (EdgeId e = 0; e < map.edge_count(); ++e) {
        DartId d = map.edge_dart(e);
        dual.arcs.push_back({e, map.region_of_dart(d), map.region_of_dart(map.alpha(d))});
    }
    dual.incident.assign(dual.nodes, {});
    for (int r = 0; r < dual.nodes; ++r) {
        for (int w : map.regions()[r].walks)
            for (DartId d : map.face_walks()[w])
                dual.incident[r].push_back(map.edge_of(d));
    }
    return dual;
}

}  // namespace surflink
