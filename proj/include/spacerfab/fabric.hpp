#ifndef SPACERFAB_FABRIC_HPP
#define SPACERFAB_FABRIC_HPP

#include <optional>
#include <vector>

#include "spacerfab/geometry.hpp"
#include "spacerfab/spacer_math.hpp"
#include "spacerfab/yarn.hpp"

namespace spacerfab {

// Complete description of one spacer fabric sample.
struct FabricSpec {
    MachineGeometry machine;
    RelaxationState relax;
    int wales = 8;
    int courses = 6;
    std::vector<SpacerFamilySpec> families;
    int loop_samples = 20;
    int tube_segments = 8;
    double panel_yarn_radius_mm = 0.25;
    std::optional<double> spacer_override_distance_mm;

    // Throws ParameterError naming the first offending field.
    void validate() const;
};

enum class PanelSide { lower, upper };

// One canonical weft loop in the cell [0, H] x [0, V], sampled at K uniform
// parameter values. Legs run from (0.15H, 0) up to (0.3H, 0.6V) and mirror on
// the right; the head is a half circle of radius 0.2H centred at (0.5H, 0.6V).
// z carries a cosine wobble of amplitude 0.06H (0.3 of the head radius),
// +amplitude at the left foot and -amplitude at the right foot.
Polyline3 base_loop_curve(double stitch_width_mm, double course_height_mm, int samples);

// Tuck anchor of stitch (wale, course) in a panel lying at plane_z.
Point3 tuck_anchor(const FabricSpec& spec, int wale, int course, double plane_z);

// One yarn per course, W loops each, loop (i, j) translated to
// (i sigma H, j tau V, plane_z).
std::vector<YarnPath> build_panel(const FabricSpec& spec, PanelSide side, double plane_z);

// One zigzag per family: a rigid hook at each tuck anchor and straight floats
// between anchors on alternating panels (lower panel at z = 0, upper at
// z = b_actual). Stepping stops at the panel edge.
std::vector<StrainedSpacer> build_spacer_paths(const FabricSpec& spec, double b_actual);

struct PanelDistance {
    std::vector<double> b_per_family;
    double b_actual = 0.0;
    std::size_t limiting_family = 0;  // argmin of b_per_family
};

// The panels settle at the smallest distance any family demands, unless the
// spec overrides it.
PanelDistance solve_panel_distance(const FabricSpec& spec);

}  // namespace spacerfab

#endif  // SPACERFAB_FABRIC_HPP
