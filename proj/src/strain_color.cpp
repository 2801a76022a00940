#include "spacerfab/strain_color.hpp"

#include <cmath>

#include "spacerfab/errors.hpp"

namespace spacerfab {

namespace {

Rgb lerp(Rgb from, Rgb to, double t) {
    auto channel = [t](int a, int b) {
        return static_cast<int>(std::lround(a + (b - a) * t));
    };
    return {channel(from.r, to.r), channel(from.g, to.g), channel(from.b, to.b)};
}

}  // namespace

const char* to_string(YarnRole role) {
    switch (role) {
        case YarnRole::panel_upper: return "panel_upper";
        case YarnRole::panel_lower: return "panel_lower";
        case YarnRole::spacer_h: return "spacer_h";
        case YarnRole::spacer_v: return "spacer_v";
    }
    return "panel_lower";
}

std::optional<YarnRole> yarn_role_from_string(const std::string& text) {
    if (text == "panel_upper") return YarnRole::panel_upper;
    if (text == "panel_lower") return YarnRole::panel_lower;
    if (text == "spacer_h") return YarnRole::spacer_h;
    if (text == "spacer_v") return YarnRole::spacer_v;
    return std::nullopt;
}

Rgb strain_to_color(double strain) {
    if (!std::isfinite(strain) || strain <= 0.0) throw DomainError("strain must be > 0");
    if (strain <= kSlackStrain) return kSlackGray;
    if (strain < 1.0) return lerp(kSlackGray, kStrainYellow, (strain - kSlackStrain) / (1.0 - kSlackStrain));
    if (strain < kRedStrain) return lerp(kStrainYellow, kStrainRed, (strain - 1.0) / (kRedStrain - 1.0));
    return kStrainRed;
}

Rgb spacer_color(double strain) {
    if (std::abs(strain - 1.0) <= kRestStrainTolerance) return kSpacerRestColor;
    return strain_to_color(strain);
}

}  // namespace spacerfab
