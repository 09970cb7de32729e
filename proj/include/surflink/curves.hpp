#pragma once

#include <optional>
#include <vector>

#include "surflink/refined_complex.hpp"

namespace surflink {

/// Closed curve in general position, encoded as the cyclic sequence of
/// refined-edge crossings: darts[i] is the side-dart of the edge crossed
/// into face_of(darts[i]); consecutive crossings share that face. Weight
/// counts diagram-edge crossings.
struct CurveOnSurface {
    const RefinedComplex* rc = nullptr;
    std::vector<int> darts;
    /// Set when the curve is the image of a certified essential curve
    /// under a surface self-homeomorphism (Dehn twist).
    bool essential_image = false;
};

/// Validates the cyclic adjacency condition. Throws CurveNotOnThisMap.
CurveOnSurface make_curve(const RefinedComplex& rc, std::vector<int> darts);

/// Removes immediate backtracks (an edge crossed and recrossed in a row)
/// until none remain. May return an empty curve.
CurveOnSurface reduce(CurveOnSurface curve);

int curve_weight(const CurveOnSurface& curve);

/// Number of cost-1 crossings after backtrack reduction.
int intersection_count(const CurveOnSurface& curve, const DiagramOnSurface& map);

/// Each face visited at most once (implies each edge crossed at most once).
bool is_face_simple(const CurveOnSurface& curve);

struct CutProfile {
    int genus = 0;
    int boundaries = 0;
    std::vector<VertexId> crossings;  // map crossings inside this component
};

struct CutResult {
    std::vector<CutProfile> components;  // sorted by (genus, boundaries)
    bool has_disc_side = false;
};

/// Cuts the surface along a simple curve and reports component profiles.
/// Total Euler characteristic is preserved and exactly two boundary
/// circles are created. Throws NonSimpleCurve for curves that are not
/// face-simple after reduction.
CutResult cut_along(const CurveOnSurface& curve);

struct EssentialityResult {
    bool essential = false;
    CutResult certificate;
};

/// True iff the curve does not bound a disc: no cut component is (0,1).
EssentialityResult is_essential(const CurveOnSurface& curve);

/// Transverse crossings between the drawn realizations of two curves:
/// passages through a common face whose chords strictly interleave, with
/// crossing points on each edge ordered canonically (the first curve's
/// point first, then the second curve's passages in order).
int transverse_crossings(const CurveOnSurface& a, const CurveOnSurface& b);

/// Splices |power| copies of `along` into `target` at every transverse
/// crossing, following `along` forward for positive power and backward
/// for negative. The underlying map is unchanged. `along` must be
/// face-simple and essential.
CurveOnSurface dehn_twist(const CurveOnSurface& target, const CurveOnSurface& along,
                          int power);

/// Curve serialization: cyclic list of refined-edge ids. Reconstruction
/// resolves side ambiguities by backtracking and returns the
/// lexicographically smallest valid dart realization.
std::vector<int> curve_edges(const CurveOnSurface& curve);
CurveOnSurface curve_from_edges(const RefinedComplex& rc, const std::vector<int>& edges);

}  // namespace surflink
