#include "surflink/bounds.hpp"

namespace surflink {
namespace bounds {

double hp_lower(int twist, int chi_surface, int chi_boundary) {
    if (twist < 0) throw MapError(MapErrorCode::InvalidTwist, "negative twist number");
    return v_oct / 2.0 * (twist - chi_surface - chi_boundary);
}

BoundsReport thickened_bounds(int twist, int genus) {
    if (twist < 1) throw MapError(MapErrorCode::InvalidTwist, "twist number below 1");
    BoundsReport r;
    if (genus == 1) {
        r.context = Context::ThickenedTorus;
        r.lower = v_oct / 2.0 * twist;
        r.upper = 10.0 * v_tet * twist;
    } else if (genus >= 2) {
        int chi = 2 - 2 * genus;
        r.context = Context::ThickenedHigherGenus;
        r.lower = v_oct / 2.0 * (twist - 3 * chi);
        r.upper = 6.0 * v_oct * twist;
    } else {
        throw MapError(MapErrorCode::BadInput, "thickened bounds need genus >= 1");
    }
    r.upper_strict = true;
    return r;
}

BoundsReport heegaard_torus_bounds(int twist) {
    BoundsReport r = thickened_bounds(twist, 1);
    r.context = Context::HeegaardTorusOrLens;
    return r;
}

BoundsReport s3_heegaard_bounds(int twist, int genus) {
    if (genus < 2)
        throw MapError(MapErrorCode::BadInput,
                       "use the Heegaard-torus context for genus below 2");
    BoundsReport r;
    r.context = Context::S3Heegaard;
    r.lower = hp_lower(twist, 2 - 2 * genus, 0);
    r.notes = "no upper bound exists in this context";
    return r;
}

TetCount tet_count(int twist, int genus) {
    if (twist < 0) throw MapError(MapErrorCode::InvalidTwist, "negative twist number");
    if (genus == 1) return {10L * twist, false, v_tet};
    if (genus >= 2) return {12L * twist, true, v_oct / 2.0};
    throw MapError(MapErrorCode::BadInput, "tetrahedron counts need genus >= 1");
}

double cusp_volume_upper(long crossings) {
    if (crossings < 1)
        throw MapError(MapErrorCode::InvalidCrossingNumber, "crossing number below 1");
    double c = static_cast<double>(crossings);
    double f = 1.0 + 2.0 / c;
    return bk_constant / 2.0 * c * f * f;
}

double multi_cusp_floor(int m) {
    if (m < 0) throw MapError(MapErrorCode::BadInput, "negative cusp-pair count");
    return 2.0 * m * v_3;
}

double cusp_density_upper(long crossings, int m) {
    if (m < 1) throw MapError(MapErrorCode::DensityUndefined, "no cusp-volume floor at m=0");
    return cusp_volume_upper(crossings) / multi_cusp_floor(m);
}

double gfal_lower(int m) {
    if (m < 0) throw MapError(MapErrorCode::BadInput, "negative cusp-pair count");
    return gfal_constant * (75.0 + 2.0 * m - 1.0);
}

}  // namespace bounds
}  // namespace surflink
