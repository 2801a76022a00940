#include "spacerfab/spacer_math.hpp"

#include <algorithm>
#include <cmath>

#include "spacerfab/errors.hpp"

namespace spacerfab {

namespace {

// 1 - x^2 without cancellation near x = 1.
double one_minus_square(double x) { return (1.0 - x) * (1.0 + x); }

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

// In-plane extent of one hop on the needles, split into the wale (x) and
// course (y) directions.
struct HopExtent {
    double across = 0.0;  // along the course, scaled by sigma
    double along = 0.0;   // along the wale, scaled by tau
};

HopExtent initial_extent(const SpacerFamilySpec& family, const MachineGeometry& machine) {
    if (family.orientation == SpacerOrientation::course_parallel) {
        return {family.float_count * machine.stitch_width_mm, 0.0};
    }
    return {family.wale_shift * machine.stitch_width_mm, family.float_count * machine.course_height_mm};
}

}  // namespace

double stitch_width_from_gauge(double gauge) {
    if (!positive_finite(gauge)) {
        throw DomainError("gauge must be a positive number of stitches per inch");
    }
    return kMillimetresPerInch / gauge;
}

MachineGeometry MachineGeometry::from_gauge(double gauge, double course_height_mm, double bed_distance_mm) {
    MachineGeometry machine;
    machine.gauge = gauge;
    machine.stitch_width_mm = stitch_width_from_gauge(gauge);
    machine.course_height_mm = course_height_mm;
    machine.bed_distance_mm = bed_distance_mm;
    machine.validate();
    return machine;
}

void MachineGeometry::validate() const {
    if (!positive_finite(gauge)) throw ParameterError("gauge", "must be > 0");
    if (!positive_finite(stitch_width_mm)) throw ParameterError("stitch_width", "must be > 0");
    if (!positive_finite(course_height_mm)) throw ParameterError("v", "course height must be > 0");
    if (!positive_finite(bed_distance_mm)) throw ParameterError("bed", "bed distance must be > 0");
}

void RelaxationState::validate() const {
    if (!std::isfinite(sigma) || sigma <= 0.0 || sigma > 1.0) {
        throw ParameterError("sigma", "must be in (0, 1]");
    }
    if (!std::isfinite(tau) || tau <= 0.0 || tau > 1.0) {
        throw ParameterError("tau", "must be in (0, 1]");
    }
}

const char* to_string(SpacerOrientation orientation) {
    switch (orientation) {
        case SpacerOrientation::course_parallel: return "course_parallel";
        case SpacerOrientation::wale_parallel: return "wale_parallel";
    }
    return "course_parallel";
}

std::optional<SpacerOrientation> orientation_from_string(const std::string& text) {
    if (text == "course_parallel") return SpacerOrientation::course_parallel;
    if (text == "wale_parallel") return SpacerOrientation::wale_parallel;
    return std::nullopt;
}

void SpacerFamilySpec::validate() const {
    const bool horizontal = orientation == SpacerOrientation::course_parallel;
    if (float_count < 1) throw ParameterError(horizontal ? "m" : "n", "float count must be >= 1");
    if (wale_shift < 0) throw ParameterError("shift", "must be >= 0");
    if (horizontal && wale_shift != 0) {
        throw ParameterError("shift", "must be 0 for a course_parallel family");
    }
    if (start_wale < 0) throw ParameterError("start_wale", "must be >= 0");
    if (start_course < 0) throw ParameterError("start_course", "must be >= 0");
    if (!positive_finite(yarn_radius_mm)) throw ParameterError("yarn_radius", "must be > 0");
}

SpacerTriangle triangle_for_family(const SpacerFamilySpec& family, const MachineGeometry& machine,
                                   const RelaxationState& relax) {
    family.validate();
    machine.validate();
    relax.validate();

    const HopExtent extent = initial_extent(family, machine);
    SpacerTriangle t;
    t.a_initial = std::hypot(extent.across, extent.along);
    t.a_relaxed = std::hypot(relax.sigma * extent.across, relax.tau * extent.along);
    t.b_initial = machine.bed_distance_mm;
    t.c_rest = std::hypot(t.a_initial, t.b_initial);
    // B^2 = C^2 - A^2 = B_i^2 + (A_i^2 - A^2), with the difference formed per
    // axis so that sigma = tau = 1 yields B_i bit for bit.
    const double released_across = extent.across * std::sqrt(one_minus_square(relax.sigma));
    const double released_along = extent.along * std::sqrt(one_minus_square(relax.tau));
    t.b_relaxed = std::hypot(t.b_initial, std::hypot(released_across, released_along));
    return t;
}

double inter_panel_distance(const SpacerFamilySpec& family, const MachineGeometry& machine,
                            const RelaxationState& relax) {
    return triangle_for_family(family, machine, relax).b_relaxed;
}

double equilibrium_ratio(const MachineGeometry& machine, const RelaxationState& relax) {
    machine.validate();
    relax.validate();
    if (relax.sigma == 1.0) {
        throw DomainError("no horizontal shrink (sigma = 1): equilibrium ratio is unbounded");
    }
    return (machine.course_height_mm / machine.stitch_width_mm) *
           std::sqrt(one_minus_square(relax.tau)) / std::sqrt(one_minus_square(relax.sigma));
}

double equilibrium_residual(const SpacerFamilySpec& h_family, const SpacerFamilySpec& v_family,
                            const MachineGeometry& machine, const RelaxationState& relax) {
    if (h_family.orientation != SpacerOrientation::course_parallel) {
        throw ParameterError("h_family", "must be course_parallel");
    }
    if (v_family.orientation != SpacerOrientation::wale_parallel) {
        throw ParameterError("v_family", "must be wale_parallel");
    }
    h_family.validate();
    v_family.validate();
    machine.validate();
    relax.validate();

    const double h = machine.stitch_width_mm;
    const double v = machine.course_height_mm;
    const double release_h = one_minus_square(relax.sigma);
    const double release_v = one_minus_square(relax.tau);
    const double mh = h_family.float_count * h;
    const double sh = v_family.wale_shift * h;
    const double nv = v_family.float_count * v;
    return mh * mh * release_h - (sh * sh * release_h + nv * nv * release_v);
}

namespace {

template <typename ResidualFn>
FloatCountSolution make_candidates(double real_value, ResidualFn residual_for) {
    FloatCountSolution solution;
    solution.feasible = true;
    solution.real_value = real_value;

    double lo = std::floor(real_value);
    double hi = std::ceil(real_value);
    const double nearest = std::round(real_value);
    if (std::abs(real_value - nearest) <= 1e-9 * std::max(1.0, real_value)) {
        lo = hi = nearest;
    }

    auto candidate = [&](double count) -> std::optional<FloatCountCandidate> {
        if (count < 1.0) return std::nullopt;
        const int n = static_cast<int>(count);
        return FloatCountCandidate{n, residual_for(n)};
    };
    solution.lower = candidate(lo);
    solution.upper = candidate(hi);
    if (!solution.upper) {
        solution.feasible = false;
        solution.reason = "no float count >= 1 is near the real solution";
    }
    return solution;
}

}  // namespace

FloatCountSolution solve_float_count(const SpacerFamilySpec& known, const MachineGeometry& machine,
                                     const RelaxationState& relax, SolveFor solve_for, int vertical_shift) {
    known.validate();
    machine.validate();
    relax.validate();

    const double h = machine.stitch_width_mm;
    const double v = machine.course_height_mm;
    const double release_h = one_minus_square(relax.sigma);
    const double release_v = one_minus_square(relax.tau);

    if (solve_for == SolveFor::m) {
        if (known.orientation != SpacerOrientation::wale_parallel) {
            throw ParameterError("n", "solving for m needs a wale_parallel family");
        }
        if (relax.sigma == 1.0) throw DomainError("no horizontal shrink (sigma = 1): m is undetermined");
        const double sh = known.wale_shift * h;
        const double nv = known.float_count * v;
        const double demand = sh * sh * release_h + nv * nv * release_v;
        if (demand <= 0.0) {
            FloatCountSolution s;
            s.reason = "vertical family does not raise the panels (tau = 1, shift = 0): no positive m";
            return s;
        }
        return make_candidates(std::sqrt(demand / (h * h * release_h)), [&](int m) {
            SpacerFamilySpec horizontal;
            horizontal.float_count = m;
            return equilibrium_residual(horizontal, known, machine, relax);
        });
    }

    if (known.orientation != SpacerOrientation::course_parallel) {
        throw ParameterError("m", "solving for n needs a course_parallel family");
    }
    if (vertical_shift < 0) throw ParameterError("shift", "must be >= 0");
    if (relax.tau == 1.0) throw DomainError("no vertical shrink (tau = 1): n is undetermined");
    const double mh = known.float_count * h;
    const double sh = vertical_shift * h;
    const double demand = (mh * mh - sh * sh) * release_h;
    if (demand <= 0.0) {
        FloatCountSolution s;
        s.reason = "skew term (shift * H)^2 (1 - sigma^2) meets or exceeds the horizontal family's demand";
        return s;
    }
    return make_candidates(std::sqrt(demand / (v * v * release_v)), [&](int n) {
        SpacerFamilySpec vertical;
        vertical.orientation = SpacerOrientation::wale_parallel;
        vertical.float_count = n;
        vertical.wale_shift = vertical_shift;
        return equilibrium_residual(known, vertical, machine, relax);
    });
}

double inclination_angle(const SpacerTriangle& triangle) {
    return std::atan2(triangle.b_relaxed, triangle.a_relaxed);
}

double db_dsigma(const SpacerFamilySpec& family, const MachineGeometry& machine, const RelaxationState& relax) {
    const SpacerTriangle t = triangle_for_family(family, machine, relax);
    const double across = initial_extent(family, machine).across;
    return -relax.sigma * across * across / t.b_relaxed;
}

}  // namespace spacerfab
