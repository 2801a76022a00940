#ifndef SPACERFAB_APP_PARAMS_HPP
#define SPACERFAB_APP_PARAMS_HPP

#include <map>
#include <optional>
#include <string>

#include "spacerfab/fabric.hpp"

namespace spacerfab::app {

// Flag / query surface of the tool. Names follow the model symbols.
// At most one spacer family per direction; richer fabrics come from a spec
// file instead.
struct FabricParams {
    double gauge = 14.0;
    double sigma = 0.98;
    double tau = 1.0;
    double bed = 3.0;
    double v = 2.5;
    std::optional<double> stitch_width;  // overrides 25.4 / gauge
    int wales = 8;
    int courses = 6;
    int m = 2;
    std::optional<int> n;
    int shift = 0;
    int loop_samples = 20;
    int tube_segments = 8;
    double panel_radius = 0.25;
    double spacer_radius = 0.1;
    std::optional<double> override_distance;
};

// Accepted ranges, shared by the CLI, the service and the explorer sliders.
struct ParamRanges {
    static constexpr double kShrinkMax = 1.0;     // sigma, tau in (0, 1]
    static constexpr double kGaugeMax = 100.0;    // gauge in (0, 100]
    static constexpr double kLengthMax = 100.0;   // bed, v in (0, 100] mm
    static constexpr int kFloatMin = 1;           // m, n in [1, 8]
    static constexpr int kFloatMax = 8;
    static constexpr int kWalesMin = 2;           // wales in [2, 64]
    static constexpr int kWalesMax = 64;
    static constexpr int kCoursesMin = 1;         // courses in [1, 64]
    static constexpr int kCoursesMax = 64;
};

// Throws ParameterError naming the flag ("sigma", "m", ...) before any
// geometry is built.
void validate_params(const FabricParams& params);

// Validated spec: one course-parallel family (m) at course 0 and, when n is
// set, one wale-parallel family (n, shift) starting at wale 1.
FabricSpec to_fabric_spec(const FabricParams& params);

// Overlays query-string style key/value pairs (sigma, tau, gauge, bed, m, n,
// shift, wales, courses, v) on `base`. Malformed values throw ParameterError.
FabricParams params_from_query(const std::multimap<std::string, std::string>& query,
                               FabricParams base = {});

// {"defaults": {...}, "ranges": {...}} for the explorer.
std::string defaults_json(const FabricParams& defaults = {});

}  // namespace spacerfab::app

#endif  // SPACERFAB_APP_PARAMS_HPP
