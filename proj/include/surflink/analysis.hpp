#pragma once

#include <optional>
#include <string>
#include <vector>

#include "surflink/curves.hpp"
#include "surflink/refined_complex.hpp"
#include "surflink/surface_map.hpp"

namespace surflink {

/// Maximal chain of crossings joined by bigons, or a lone crossing.
struct TwistRegion {
    std::vector<VertexId> crossings;  // in chain order
    std::vector<int> bigon_walks;     // walk indices of the joining bigons
    bool closed = false;              // chain closes into a cycle
};

bool is_alternating(const DiagramOnSurface& map);

struct CheckerboardResult {
    bool ok = false;
    std::vector<int> colouring;          // per region, 0/1 when ok
    std::vector<int> odd_cycle_regions;  // witness when not ok
};

CheckerboardResult checkerboard(const DiagramOnSurface& map);

std::vector<TwistRegion> twist_regions(const DiagramOnSurface& map);
int twist_number(const DiagramOnSurface& map);
int crossing_number(const DiagramOnSurface& map);

/// A disc certificate for weak-primeness / twist-reducedness failures:
/// the boundary as crossed map edges (with multiplicity) and the
/// crossings inside the offending disc side.
struct WitnessDisc {
    std::vector<EdgeId> boundary_edges;
    std::vector<VertexId> disc_crossings;
    std::string reason;
};

struct DiscCheckResult {
    bool ok = false;
    std::optional<WitnessDisc> witness;
};

DiscCheckResult is_weakly_prime(const DiagramOnSurface& map);
DiscCheckResult is_twist_reduced(const DiagramOnSurface& map);

struct EdgeWidthResult {
    bool finite = false;
    int width = 0;                         // valid when finite
    std::vector<int> certificate_edges;    // refined-edge cycle on refine(map)
};

/// Minimum diagram crossings of an essential simple closed curve,
/// computed from 0/1 shortest-path trees rooted at every dual face
/// combined with candidate cycles through each edge, plus region-core
/// cycles; every candidate is certified by cut_along. Returns an
/// infinite sentinel when no essential curve exists (the sphere).
EdgeWidthResult edge_width(const DiagramOnSurface& map, int threads = 1);

/// Exhaustive enumeration of simple dual cycles of weight at most
/// `max_weight`; returns the least essential weight found. Independent
/// verification path for edge_width.
std::optional<int> edge_width_by_enumeration(const DiagramOnSurface& map, int max_weight);

struct RepresentativityResult {
    bool finite = false;
    int value = 0;
    int argmin = -1;  // index into the supplied family
};

/// Minimum intersection count over a sampled family of simple essential
/// curves; a documented upper bound for true representativity. Curves
/// that are homeomorphism images of certified essential curves are
/// accepted without a fresh simplicity check.
RepresentativityResult representativity_over(const DiagramOnSurface& map,
                                             const std::vector<CurveOnSurface>& curves);

}  // namespace surflink
