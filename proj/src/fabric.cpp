#include "spacerfab/fabric.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "spacerfab/errors.hpp"
#include "spacerfab/strain_color.hpp"

namespace spacerfab {

namespace {

constexpr double kFootX = 0.15;
constexpr double kShoulderX = 0.30;
constexpr double kShoulderY = 0.60;
constexpr double kHeadRadius = 0.20;  // in units of H
constexpr double kWobble = 0.3 * kHeadRadius;

constexpr double kAnchorX = 0.5;
constexpr double kAnchorY = 0.3;
constexpr double kTuckDepth = 0.4;  // apex offset in units of V

struct Stitch {
    int wale = 0;
    int course = 0;
};

struct FamilyWalk {
    std::vector<Stitch> stitches;
    bool truncated = false;
};

bool is_horizontal(const SpacerFamilySpec& family) {
    return family.orientation == SpacerOrientation::course_parallel;
}

FamilyWalk walk_family(const FabricSpec& spec, const SpacerFamilySpec& family) {
    const int dw = is_horizontal(family) ? family.float_count : family.wale_shift;
    const int dc = is_horizontal(family) ? 0 : family.float_count;
    FamilyWalk walk;
    Stitch at{family.start_wale, family.start_course};
    while (at.wale < spec.wales && at.course < spec.courses) {
        walk.stitches.push_back(at);
        at = {at.wale + dw, at.course + dc};
    }
    if (!walk.stitches.empty()) {
        const Stitch last = walk.stitches.back();
        walk.truncated = is_horizontal(family) ? last.wale < spec.wales - 1 : last.course < spec.courses - 1;
    }
    return walk;
}

}  // namespace

void FabricSpec::validate() const {
    machine.validate();
    relax.validate();
    if (wales < 2) throw ParameterError("wales", "must be >= 2");
    if (courses < 1) throw ParameterError("courses", "must be >= 1");
    if (loop_samples < 8) throw ParameterError("loop_samples", "must be >= 8");
    if (tube_segments < 4) throw ParameterError("tube_segments", "must be >= 4");
    if (!std::isfinite(panel_yarn_radius_mm) || panel_yarn_radius_mm <= 0.0) {
        throw ParameterError("panel_yarn_radius", "must be > 0");
    }
    if (spacer_override_distance_mm) {
        const double d = *spacer_override_distance_mm;
        if (!std::isfinite(d) || d <= 0.0) throw ParameterError("spacer_override_distance", "must be > 0");
    }
    for (const SpacerFamilySpec& family : families) {
        family.validate();
        const bool horizontal = is_horizontal(family);
        if (horizontal && family.float_count >= wales) {
            throw ParameterError("m", "float count must be < wales (" + std::to_string(wales) + ")");
        }
        if (!horizontal && family.float_count >= courses) {
            throw ParameterError("n", "float count must be < courses (" + std::to_string(courses) + ")");
        }
        if (family.start_wale >= wales) throw ParameterError("start_wale", "must be < wales");
        if (family.start_course >= courses) throw ParameterError("start_course", "must be < courses");
        if (walk_family(*this, family).stitches.size() < 2) {
            throw ParameterError(horizontal ? "m" : "shift", "family has no complete hop inside the panel");
        }
    }
}

Polyline3 base_loop_curve(double stitch_width_mm, double course_height_mm, int samples) {
    if (!(stitch_width_mm > 0.0) || !(course_height_mm > 0.0)) {
        throw ParameterError("loop", "stitch width and course height must be > 0");
    }
    if (samples < 8) throw ParameterError("loop_samples", "must be >= 8");
    const double h = stitch_width_mm;
    const double v = course_height_mm;

    std::vector<Point3> pts;
    pts.reserve(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i) {
        const double t = static_cast<double>(i) / (samples - 1);
        const double piece = 3.0 * t;
        double x = 0.0;
        double y = 0.0;
        if (piece <= 1.0) {
            x = h * (kFootX + (kShoulderX - kFootX) * piece);
            y = v * (kShoulderY * piece);
        } else if (piece < 2.0) {
            const double theta = std::numbers::pi * (2.0 - piece);
            x = h * (0.5 + kHeadRadius * std::cos(theta));
            y = v * kShoulderY + h * kHeadRadius * std::sin(theta);
        } else {
            const double u = piece - 2.0;
            x = h * ((1.0 - kShoulderX) + (kShoulderX - kFootX) * u);
            y = v * (kShoulderY * (1.0 - u));
        }
        const double z = h * kWobble * std::cos(std::numbers::pi * t);
        pts.push_back({x, y, z});
    }
    return Polyline3(std::move(pts));
}

Point3 tuck_anchor(const FabricSpec& spec, int wale, int course, double plane_z) {
    const double h = spec.machine.stitch_width_mm;
    const double v = spec.machine.course_height_mm;
    return {wale * spec.relax.sigma * h + kAnchorX * h,
            course * spec.relax.tau * v + kAnchorY * v, plane_z};
}

std::vector<YarnPath> build_panel(const FabricSpec& spec, PanelSide side, double plane_z) {
    spec.validate();
    const double h = spec.machine.stitch_width_mm;
    const double v = spec.machine.course_height_mm;
    const Polyline3 loop = base_loop_curve(h, v, spec.loop_samples);

    std::vector<YarnPath> yarns;
    yarns.reserve(static_cast<std::size_t>(spec.courses));
    for (int j = 0; j < spec.courses; ++j) {
        std::vector<Point3> pts;
        pts.reserve(static_cast<std::size_t>(spec.wales) * loop.size());
        for (int i = 0; i < spec.wales; ++i) {
            const Point3 origin{i * spec.relax.sigma * h, j * spec.relax.tau * v, plane_z};
            for (const Point3& p : loop.points()) pts.push_back(origin + p);
        }
        YarnPath yarn;
        yarn.path = Polyline3(std::move(pts));
        yarn.radius_mm = spec.panel_yarn_radius_mm;
        yarn.role = side == PanelSide::lower ? YarnRole::panel_lower : YarnRole::panel_upper;
        yarn.color = side == PanelSide::lower ? kLowerPanelColor : kUpperPanelColor;
        yarns.push_back(std::move(yarn));
    }
    return yarns;
}

std::vector<StrainedSpacer> build_spacer_paths(const FabricSpec& spec, double b_actual) {
    spec.validate();
    if (!std::isfinite(b_actual) || b_actual <= 0.0) throw ParameterError("b_actual", "must be > 0");
    const Point3 hook{0.0, kTuckDepth * spec.machine.course_height_mm, 0.0};

    std::vector<StrainedSpacer> spacers;
    spacers.reserve(spec.families.size());
    for (std::size_t f = 0; f < spec.families.size(); ++f) {
        const SpacerFamilySpec& family = spec.families[f];
        const FamilyWalk walk = walk_family(spec, family);

        StrainedSpacer spacer;
        spacer.family_index = f;
        spacer.truncated = walk.truncated;
        std::vector<Point3> pts;
        pts.reserve(walk.stitches.size() * 3);
        for (std::size_t k = 0; k < walk.stitches.size(); ++k) {
            const double plane_z = k % 2 == 0 ? 0.0 : b_actual;
            const Point3 anchor = tuck_anchor(spec, walk.stitches[k].wale, walk.stitches[k].course, plane_z);
            spacer.anchors.push_back(anchor);
            // rigid hook: entry, apex, exit
            pts.push_back(anchor);
            pts.push_back(anchor + hook);
            pts.push_back(anchor);
        }
        spacer.rest_length_mm = triangle_for_family(family, spec.machine, spec.relax).c_rest;
        spacer.current_length_mm = distance(spacer.anchors[0], spacer.anchors[1]);
        spacer.strain = spacer.current_length_mm / spacer.rest_length_mm;

        spacer.yarn.path = Polyline3(std::move(pts));
        spacer.yarn.radius_mm = family.yarn_radius_mm;
        spacer.yarn.role = is_horizontal(family) ? YarnRole::spacer_h : YarnRole::spacer_v;
        spacer.yarn.color = spacer_color(spacer.strain);
        spacers.push_back(std::move(spacer));
    }
    return spacers;
}

PanelDistance solve_panel_distance(const FabricSpec& spec) {
    if (spec.families.empty()) throw ParameterError("families", "at least one spacer family is required");
    spec.validate();
    PanelDistance result;
    result.b_per_family.reserve(spec.families.size());
    for (const SpacerFamilySpec& family : spec.families) {
        result.b_per_family.push_back(inter_panel_distance(family, spec.machine, spec.relax));
    }
    const auto it = std::min_element(result.b_per_family.begin(), result.b_per_family.end());
    result.limiting_family = static_cast<std::size_t>(it - result.b_per_family.begin());
    result.b_actual = spec.spacer_override_distance_mm.value_or(*it);
    return result;
}

}  // namespace spacerfab
