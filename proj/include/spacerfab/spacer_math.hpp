#ifndef SPACERFAB_SPACER_MATH_HPP
#define SPACERFAB_SPACER_MATH_HPP

#include <optional>
#include <string>

namespace spacerfab {

inline constexpr double kMillimetresPerInch = 25.4;

// Stitch width H in mm for a machine gauge given in stitches per inch.
double stitch_width_from_gauge(double gauge);

// Machine-side lengths, all in mm.
struct MachineGeometry {
    double gauge = 14.0;             // stitches per inch
    double stitch_width_mm = kMillimetresPerInch / 14.0;  // H
    double course_height_mm = 2.5;   // V
    double bed_distance_mm = 3.0;    // B_i, needle-bed gap at knitting time

    static MachineGeometry from_gauge(double gauge, double course_height_mm, double bed_distance_mm);

    // Throws ParameterError naming the first offending field.
    void validate() const;
};

// Off-needle shrink of the panels. sigma acts along courses (wale spacing),
// tau along wales (course spacing). 1 means unshrunk.
struct RelaxationState {
    double sigma = 1.0;
    double tau = 1.0;

    void validate() const;
};

enum class SpacerOrientation { course_parallel, wale_parallel };

const char* to_string(SpacerOrientation orientation);
std::optional<SpacerOrientation> orientation_from_string(const std::string& text);

// One family of spacer monofilaments. float_count is m for course-parallel
// families and n for wale-parallel ones; wale_shift is the sideways step per
// hop of a wale-parallel family.
struct SpacerFamilySpec {
    SpacerOrientation orientation = SpacerOrientation::course_parallel;
    int float_count = 2;
    int wale_shift = 0;
    int start_wale = 0;
    int start_course = 0;
    double yarn_radius_mm = 0.1;

    void validate() const;
};

// The two right triangles of a spacer hop: (A_i, B_i, C) on the needles and
// (A, B, C) after relaxation, with the spacer length C held rigid.
struct SpacerTriangle {
    double a_initial = 0.0;
    double a_relaxed = 0.0;
    double b_initial = 0.0;
    double c_rest = 0.0;
    double b_relaxed = 0.0;
};

SpacerTriangle triangle_for_family(const SpacerFamilySpec& family, const MachineGeometry& machine,
                                   const RelaxationState& relax);

// Relaxed inter-panel distance B demanded by one family.
double inter_panel_distance(const SpacerFamilySpec& family, const MachineGeometry& machine,
                            const RelaxationState& relax);

// m/n at which an unskewed horizontal and a vertical family demand the same
// B: (V/H) * sqrt(1 - tau^2) / sqrt(1 - sigma^2). Requires sigma < 1.
double equilibrium_ratio(const MachineGeometry& machine, const RelaxationState& relax);

// B_h^2 - B_v^2 in mm^2, i.e.
// (mH)^2 (1 - sigma^2) - [(sH)^2 (1 - sigma^2) + (nV)^2 (1 - tau^2)].
// Zero exactly when both families push the panels to the same distance.
double equilibrium_residual(const SpacerFamilySpec& h_family, const SpacerFamilySpec& v_family,
                            const MachineGeometry& machine, const RelaxationState& relax);

enum class SolveFor { m, n };

struct FloatCountCandidate {
    int float_count = 0;
    double residual_mm2 = 0.0;
};

struct FloatCountSolution {
    bool feasible = false;
    std::string reason;                          // set when infeasible
    double real_value = 0.0;                     // zero of the residual
    std::optional<FloatCountCandidate> lower;    // floor, absent when < 1
    std::optional<FloatCountCandidate> upper;    // ceil, absent when < 1
};

// Real float count of the unknown family that balances `known`. When solving
// for m, `known` is the vertical family and its wale_shift is used. When
// solving for n, `known` is the horizontal family and `vertical_shift` is
// the shift the vertical family will use.
// Throws DomainError when the solved-for direction has no shrink.
FloatCountSolution solve_float_count(const SpacerFamilySpec& known, const MachineGeometry& machine,
                                     const RelaxationState& relax, SolveFor solve_for,
                                     int vertical_shift = 0);

// Spacer angle against the panel plane, arctan(B / A); pi/2 when A = 0.
double inclination_angle(const SpacerTriangle& triangle);

// dB/dsigma in mm per unit sigma: -sigma * (horizontal extent of A_i)^2 / B.
double db_dsigma(const SpacerFamilySpec& family, const MachineGeometry& machine,
                 const RelaxationState& relax);

}  // namespace spacerfab

#endif  // SPACERFAB_SPACER_MATH_HPP
