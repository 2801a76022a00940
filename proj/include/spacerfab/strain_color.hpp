#ifndef SPACERFAB_STRAIN_COLOR_HPP
#define SPACERFAB_STRAIN_COLOR_HPP

#include "spacerfab/yarn.hpp"

namespace spacerfab {

inline constexpr Rgb kLowerPanelColor{60, 90, 220};
inline constexpr Rgb kUpperPanelColor{60, 180, 90};
inline constexpr Rgb kSpacerRestColor{240, 200, 40};

inline constexpr Rgb kSlackGray{150, 150, 150};
inline constexpr Rgb kStrainYellow{255, 210, 0};
inline constexpr Rgb kStrainRed{255, 0, 0};

inline constexpr double kSlackStrain = 0.95;
inline constexpr double kRedStrain = 1.10;
// Spacers within this distance of strain 1 count as at rest.
inline constexpr double kRestStrainTolerance = 1e-9;

// Piecewise-linear ramp: gray up to 0.95, gray to yellow on [0.95, 1],
// yellow to red on [1, 1.1], red beyond. Channels rounded to nearest.
Rgb strain_to_color(double strain);

// Scene color of a spacer: the family yellow at rest, the strain ramp otherwise.
Rgb spacer_color(double strain);

}  // namespace spacerfab

#endif  // SPACERFAB_STRAIN_COLOR_HPP
