#ifndef SPACERFAB_SCENE_JSON_HPP
#define SPACERFAB_SCENE_JSON_HPP

#include <string>
#include <string_view>

#include "spacerfab/fabric.hpp"
#include "spacerfab/scene.hpp"

namespace spacerfab {

// Fixed-point text for every real in the canonical documents: exactly six
// decimals, negative zero printed as 0.000000.
std::string format_real(double value);

// Canonical scene document: compact, keys in fixed order
//   meta {version, spec, frame}
//   computed {b_per_family, b_actual, equilibrium_residual, inclination_angles, strains}
//   yarns [{role, color, radius, strain?, points}]
//   collisions [{families, segments, distance}]
// Identical scenes encode to identical bytes.
std::string encode_scene_json(const Scene& scene);

// Throws ParseError naming the offending path ("yarns", "computed.b_actual", ...).
Scene decode_scene_json(std::string_view text);

// Fabric spec object as echoed in meta.spec:
//   {gauge, stitch_width, course_height, bed_distance, sigma, tau, wales,
//    courses, loop_samples, tube_segments, panel_yarn_radius,
//    spacer_override_distance (number or null),
//    families [{orientation, float_count, wale_shift, start_wale, start_course, yarn_radius}]}
std::string encode_fabric_spec_json(const FabricSpec& spec);

// Spec files may omit fields (defaults apply, stitch_width follows the gauge).
// With `strict`, every field must be present. Errors are prefixed by `path`.
FabricSpec decode_fabric_spec_json(std::string_view text, bool strict = false);

}  // namespace spacerfab

#endif  // SPACERFAB_SCENE_JSON_HPP
