#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace surflink {

/// Dense 0-based dart index. Darts at crossing v occupy the block
/// [4v, 4v+4) and the block is a single sigma-cycle.
using DartId = std::int32_t;
using VertexId = std::int32_t;
using EdgeId = std::int32_t;

enum class MapErrorCode {
    NonQuadrivalent,
    AlphaNotInvolution,
    DisconnectedGraph,
    EulerMismatch,
    OrphanFaceWalk,
    NonSimpleCurve,
    CurvesOnDifferentMaps,
    CurveNotOnThisMap,
    InessentialCurve,
    InvalidAssignment,
    NoKnotParityFound,
    PowerTooSmall,
    TwistTooSmall,
    InvalidTwist,
    InvalidCrossingNumber,
    DensityUndefined,
    BadInput,
};

class MapError : public std::runtime_error {
  public:
    MapError(MapErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    MapErrorCode code() const { return code_; }

  private:
    MapErrorCode code_;
};

const char* to_string(MapErrorCode code);

/// One complementary region of the diagram: a set of face walks plus the
/// genus of the (possibly non-disc) surface piece they bound.
struct Region {
    std::vector<int> walks;  // indices into face_walks(), each used once
    int genus = 0;
};

/// Link diagram on a closed oriented surface as a decorated rotation
/// system. sigma is the counterclockwise dart successor around each
/// crossing, alpha the edge involution. Face tracing uses sigma∘alpha
/// (turn left); this convention is fixed and all fixtures depend on it.
///
/// Immutable after build_map; all operations are pure.
class DiagramOnSurface {
  public:
    int dart_count() const { return static_cast<int>(sigma_.size()); }
    int crossings() const { return dart_count() / 4; }
    int edge_count() const { return dart_count() / 2; }

    DartId sigma(DartId d) const { return sigma_[d]; }
    DartId sigma_inv(DartId d) const { return sigma_inv_[d]; }
    DartId alpha(DartId d) const { return alpha_[d]; }
    VertexId vertex_of(DartId d) const { return d / 4; }
    /// Face successor, sigma∘alpha.
    DartId phi(DartId d) const { return sigma_[alpha_[d]]; }

    /// Edges are numbered by their smaller dart: edge_of(d) is the index
    /// of min(d, alpha d) in the sorted list of edge representatives.
    EdgeId edge_of(DartId d) const { return edge_of_[d]; }
    DartId edge_dart(EdgeId e) const { return edge_dart_[e]; }

    /// True if dart d lies on the over-strand of its crossing.
    bool is_over(DartId d) const;
    bool over_even_pair(VertexId v) const { return over_even_pair_[v]; }

    const std::vector<std::vector<DartId>>& face_walks() const { return walks_; }
    int walk_of_dart(DartId d) const { return walk_of_dart_[d]; }
    const std::vector<Region>& regions() const { return regions_; }
    int region_of_walk(int w) const { return region_of_walk_[w]; }
    int region_of_dart(DartId d) const { return region_of_walk_[walk_of_dart_[d]]; }

    int genus() const { return genus_; }
    int euler_characteristic() const { return 2 - 2 * genus_; }

    bool region_is_disc(int r) const {
        return regions_[r].genus == 0 && regions_[r].walks.size() == 1;
    }

    /// Named marked curves, serialized as refined-edge id cycles. Opaque
    /// at this layer; interpreted by the curves module.
    const std::map<std::string, std::vector<int>>& marked_curves() const {
        return marked_;
    }
    void set_marked_curve(const std::string& name, std::vector<int> cycle) {
        marked_[name] = std::move(cycle);
    }

    const std::vector<DartId>& sigma_table() const { return sigma_; }
    const std::vector<DartId>& alpha_table() const { return alpha_; }
    const std::vector<bool>& over_even_pair_table() const { return over_even_pair_; }

    friend DiagramOnSurface build_map(std::vector<DartId> sigma,
                                      std::vector<DartId> alpha,
                                      std::vector<bool> over_even_pair,
                                      std::vector<Region> regions,
                                      std::map<std::string, std::vector<int>> marked);

  private:
    std::vector<DartId> sigma_, sigma_inv_, alpha_;
    std::vector<bool> over_even_pair_;
    std::vector<Region> regions_;
    std::vector<std::vector<DartId>> walks_;
    std::vector<int> walk_of_dart_;
    std::vector<int> region_of_walk_;
    std::vector<EdgeId> edge_of_;
    std::vector<DartId> edge_dart_;
    std::map<std::string, std::vector<int>> marked_;
    int genus_ = 0;
};

/// Validates the rotation system and region assignment and assembles the
/// diagram. Face walks are listed in order of their smallest dart and
/// each walk starts at that dart. If `regions` is empty, every walk gets
/// its own genus-0 region (all-disc).
///
/// Throws MapError: NonQuadrivalent, AlphaNotInvolution,
/// DisconnectedGraph, OrphanFaceWalk, EulerMismatch.
DiagramOnSurface build_map(std::vector<DartId> sigma,
                           std::vector<DartId> alpha,
                           std::vector<bool> over_even_pair,
                           std::vector<Region> regions = {},
                           std::map<std::string, std::vector<int>> marked = {});

/// Number of link components: orbits of d -> alpha(sigma²(d)) come in
/// reversed pairs, one pair per component.
int link_components(const DiagramOnSurface& map);

/// Dual graph on regions, one arc per diagram edge.
struct RegionDual {
    int nodes = 0;
    struct Arc {
        EdgeId edge;
        int region_a, region_b;  // sides of dart e and alpha(e)
    };
    std::vector<Arc> arcs;
    std::vector<std::vector<int>> incident;  // arc ids per region, in boundary-walk order
};

RegionDual region_dual(const DiagramOnSurface& map);

}  // namespace surflink
