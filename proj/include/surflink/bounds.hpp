#pragma once

#include <optional>
#include <string>

#include "surflink/surface_map.hpp"

namespace surflink {
namespace bounds {

/// Volume constants at their customary printed precision (truncations of
/// the exact values).
inline constexpr double v_tet = 1.01494;  // regular ideal tetrahedron
inline constexpr double v_oct = 3.66386;  // regular ideal octahedron
inline constexpr double v_3 = v_tet;
inline constexpr double bk_constant = 9.0;
inline constexpr double gfal_constant = 0.64756;

enum class Context {
    S3Heegaard,           // genus >= 2 Heegaard surface in the 3-sphere
    ThickenedTorus,       // torus x interval
    ThickenedHigherGenus, // genus >= 2 surface x interval
    HeegaardTorusOrLens,  // Heegaard torus in S^3 or a lens space
};

struct BoundsReport {
    Context context;
    double lower = 0.0;
    std::optional<double> upper;
    bool upper_strict = false;
    bool lower_is_limit = false;  // certified only asymptotically
    std::string notes;
};

/// (v_oct/2) (t - chi(F) - chi(dY)).
double hp_lower(int twist, int chi_surface, int chi_boundary);

/// Two-sided bounds in a thickened surface: torus gives
/// [(v_oct/2) t, 10 v_tet t), genus >= 2 gives
/// [(v_oct/2)(t - 3 chi(F)), 6 v_oct t).
BoundsReport thickened_bounds(int twist, int genus);

/// Torus bounds re-tagged for a Heegaard torus in S^3 or a lens space.
BoundsReport heegaard_torus_bounds(int twist);

/// No upper bound exists in this context; lower from hp_lower with
/// chi(dY) = 0.
BoundsReport s3_heegaard_bounds(int twist, int genus);

struct TetCount {
    long count;
    bool generalised;  // two ideal + two ultra-ideal vertices
    double max_cell_volume;
};

/// 10 t ideal tetrahedra over a torus, 12 t generalised tetrahedra of
/// maximal volume v_oct/2 for higher genus.
TetCount tet_count(int twist, int genus);

/// (9/2) c (1 + 2/c)^2.
double cusp_volume_upper(long crossings);

/// 2m v_3; the floor holds for all but finitely many fillings.
double multi_cusp_floor(int m);
double cusp_density_upper(long crossings, int m);

/// gfal_constant * (75 + 2m - 1).
double gfal_lower(int m);

}  // namespace bounds
}  // namespace surflink
