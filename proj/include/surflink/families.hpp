#pragma once

#include <utility>
#include <vector>

#include "surflink/curves.hpp"
#include "surflink/refined_complex.hpp"
#include "surflink/surface_map.hpp"

namespace surflink {

enum class TemplateKind { T1, T2 };

/// Genus-2 grid template: six parallel strands form a closed cable
/// running over both handles and through the waist twice; three
/// contractible rings encircle a disc met by both waist lanes. T1 has
/// the 72 strand/ring crossings and one three-walk complementary region;
/// T2 threads four further curves through the grid (12 ring crossings
/// each) so that every complementary region is a disc.
struct Template {
    TemplateKind kind;
    DiagramOnSurface map;
    /// True where the oriented curve through a dart enters its crossing.
    std::vector<bool> in_port;
    /// Signed strand passes through any twist-circle disc: each strand
    /// crosses once in each direction.
    std::vector<std::pair<int, int>> c_disc_passes;
};

Template make_template(TemplateKind kind);

/// Replaces every crossing by an alternating chain of assignment[v] >= 1
/// crossings, axis aligned with the strand orientations so that all
/// orientations persist. Marked curves are carried over. The output is
/// alternating with the template's twist number.
DiagramOnSurface insert_twists(const Template& tmpl, const std::vector<int>& assignment);

/// Adjusts the assignment by at most +1 per site, greedily merging link
/// components in site order, until the result is a knot.
std::vector<int> choose_knot_parity(const Template& tmpl, std::vector<int> assignment);

/// Replaces marked curves x, y, z by their images under the composed
/// Dehn twists along u, v, w with the given powers; the diagram itself
/// is unchanged. Throws PowerTooSmall for powers below 8 unless
/// `strict` is false.
void apply_handlebody_twists(DiagramOnSurface& diagram, int power_u, int power_v,
                             int power_w, bool strict = true);

struct FamilyDescriptor {
    TemplateKind kind = TemplateKind::T2;
    std::vector<int> twists;  // per template crossing; empty = all ones
    int hb_u = 8, hb_v = 8, hb_w = 8;
    std::vector<int> c_twists;  // one entry per curve, 2m entries, each >= 7
    bool knotify = true;
};

struct FamilyBuild {
    Template tmpl;
    std::vector<int> twists;  // after parity correction
    DiagramOnSurface diagram;
};

/// Runs the construction pipeline: template, twist insertion (with knot
/// parity), handlebody twists on the marks, twist-circle bookkeeping.
/// Throws TwistTooSmall / PowerTooSmall / InvalidAssignment.
FamilyBuild build_family(const FamilyDescriptor& desc, bool strict_powers = true);

/// Signed sum of oriented strand passes through twist-circle disc i.
int linking_number(const Template& tmpl, int i);
int linking_number(const FamilyDescriptor& desc, int i);

/// Marked-curve access on the canonical refinement.
CurveOnSurface marked_curve(const RefinedComplex& rc, const std::string& name);

}  // namespace surflink
