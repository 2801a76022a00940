#ifndef SPACERFAB_YARN_HPP
#define SPACERFAB_YARN_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spacerfab/geometry.hpp"

namespace spacerfab {

struct Rgb {
    int r = 0;
    int g = 0;
    int b = 0;
    friend bool operator==(const Rgb&, const Rgb&) = default;
};

enum class YarnRole { panel_upper, panel_lower, spacer_h, spacer_v };

const char* to_string(YarnRole role);
std::optional<YarnRole> yarn_role_from_string(const std::string& text);

struct YarnPath {
    Polyline3 path;
    double radius_mm = 0.0;
    YarnRole role = YarnRole::panel_lower;
    Rgb color;
};

// A spacer zigzag with its elongation state. Every hop of a family has the
// same chord, so one current length describes the whole yarn.
struct StrainedSpacer {
    YarnPath yarn;
    std::size_t family_index = 0;
    double rest_length_mm = 0.0;
    double current_length_mm = 0.0;
    double strain = 1.0;
    std::vector<Point3> anchors;  // tuck anchors in hop order, alternating panels
    bool truncated = false;       // stepping was cut at the panel edge
};

}  // namespace spacerfab

#endif  // SPACERFAB_YARN_HPP
