#include "spacerfab/app/params.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <set>

#include "spacerfab/errors.hpp"
#include "spacerfab/scene_json.hpp"

namespace spacerfab::app {

namespace {

void check_shrink(const char* name, double value) {
    if (!std::isfinite(value) || value <= 0.0 || value > ParamRanges::kShrinkMax) {
        throw ParameterError(name, "must be in (0, 1]");
    }
}

void check_positive(const char* name, double value, double max) {
    if (!std::isfinite(value) || value <= 0.0 || value > max) {
        throw ParameterError(name, "must be in (0, " + format_real(max) + "]");
    }
}

void check_int(const char* name, int value, int lo, int hi) {
    if (value < lo || value > hi) {
        throw ParameterError(name, "must be in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
}

double parse_real(const std::string& name, const std::string& text) {
    const char* begin = text.c_str();
    char* end = nullptr;
    const double value = std::strtod(begin, &end);
    if (text.empty() || end != begin + text.size() || !std::isfinite(value)) {
        throw ParameterError(name, "'" + text + "' is not a number");
    }
    return value;
}

int parse_int(const std::string& name, const std::string& text) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
        throw ParameterError(name, "'" + text + "' is not an integer");
    }
    return value;
}

}  // namespace

void validate_params(const FabricParams& p) {
    check_shrink("sigma", p.sigma);
    check_shrink("tau", p.tau);
    check_positive("gauge", p.gauge, ParamRanges::kGaugeMax);
    check_positive("bed", p.bed, ParamRanges::kLengthMax);
    check_positive("v", p.v, ParamRanges::kLengthMax);
    if (p.stitch_width) check_positive("stitch_width", *p.stitch_width, ParamRanges::kLengthMax);
    check_int("wales", p.wales, ParamRanges::kWalesMin, ParamRanges::kWalesMax);
    check_int("courses", p.courses, ParamRanges::kCoursesMin, ParamRanges::kCoursesMax);
    check_int("m", p.m, ParamRanges::kFloatMin, ParamRanges::kFloatMax);
    if (p.m >= p.wales) throw ParameterError("m", "must be < wales (" + std::to_string(p.wales) + ")");
    if (p.n) {
        check_int("n", *p.n, ParamRanges::kFloatMin, ParamRanges::kFloatMax);
        if (*p.n >= p.courses) throw ParameterError("n", "must be < courses (" + std::to_string(p.courses) + ")");
    }
    if (p.shift < 0 || p.shift >= p.wales) {
        throw ParameterError("shift", "must be in [0, wales)");
    }
    if (p.n && 1 + p.shift >= p.wales) {
        throw ParameterError("shift", "vertical spacer would leave the panel after one hop");
    }
    if (p.loop_samples < 8) throw ParameterError("loop_samples", "must be >= 8");
    if (p.tube_segments < 4) throw ParameterError("tube_segments", "must be >= 4");
    check_positive("panel_radius", p.panel_radius, ParamRanges::kLengthMax);
    check_positive("spacer_radius", p.spacer_radius, ParamRanges::kLengthMax);
    if (p.override_distance) check_positive("override", *p.override_distance, ParamRanges::kLengthMax);
}

FabricSpec to_fabric_spec(const FabricParams& p) {
    validate_params(p);
    FabricSpec spec;
    spec.machine = MachineGeometry::from_gauge(p.gauge, p.v, p.bed);
    if (p.stitch_width) spec.machine.stitch_width_mm = *p.stitch_width;
    spec.relax = {p.sigma, p.tau};
    spec.wales = p.wales;
    spec.courses = p.courses;
    spec.loop_samples = p.loop_samples;
    spec.tube_segments = p.tube_segments;
    spec.panel_yarn_radius_mm = p.panel_radius;
    spec.spacer_override_distance_mm = p.override_distance;

    SpacerFamilySpec horizontal;
    horizontal.orientation = SpacerOrientation::course_parallel;
    horizontal.float_count = p.m;
    horizontal.yarn_radius_mm = p.spacer_radius;
    spec.families.push_back(horizontal);
    if (p.n) {
        SpacerFamilySpec vertical;
        vertical.orientation = SpacerOrientation::wale_parallel;
        vertical.float_count = *p.n;
        vertical.wale_shift = p.shift;
        vertical.start_wale = 1;
        vertical.yarn_radius_mm = p.spacer_radius;
        spec.families.push_back(vertical);
    }
    spec.validate();
    return spec;
}

FabricParams params_from_query(const std::multimap<std::string, std::string>& query, FabricParams p) {
    static const std::set<std::string> known = {"sigma", "tau", "gauge", "bed", "m",
                                                "n", "shift", "wales", "courses", "v"};
    for (const auto& [key, value] : query) {
        if (!known.count(key)) throw ParameterError(key, "unknown parameter");
        if (query.count(key) > 1) throw ParameterError(key, "given more than once");
        if (key == "sigma") p.sigma = parse_real(key, value);
        else if (key == "tau") p.tau = parse_real(key, value);
        else if (key == "gauge") p.gauge = parse_real(key, value);
        else if (key == "bed") p.bed = parse_real(key, value);
        else if (key == "v") p.v = parse_real(key, value);
        else if (key == "m") p.m = parse_int(key, value);
        else if (key == "n") p.n = parse_int(key, value);
        else if (key == "shift") p.shift = parse_int(key, value);
        else if (key == "wales") p.wales = parse_int(key, value);
        else if (key == "courses") p.courses = parse_int(key, value);
    }
    return p;
}

std::string defaults_json(const FabricParams& d) {
    std::string out = "{\"defaults\":{";
    out += "\"sigma\":" + format_real(d.sigma);
    out += ",\"tau\":" + format_real(d.tau);
    out += ",\"gauge\":" + format_real(d.gauge);
    out += ",\"bed\":" + format_real(d.bed);
    out += ",\"m\":" + std::to_string(d.m);
    out += ",\"n\":" + (d.n ? std::to_string(*d.n) : std::string("null"));
    out += ",\"shift\":" + std::to_string(d.shift);
    out += ",\"wales\":" + std::to_string(d.wales);
    out += ",\"courses\":" + std::to_string(d.courses);
    out += ",\"v\":" + format_real(d.v);
    out += "},\"ranges\":{";
    out += "\"sigma\":{\"min_exclusive\":0.000000,\"max\":1.000000}";
    out += ",\"tau\":{\"min_exclusive\":0.000000,\"max\":1.000000}";
    out += ",\"gauge\":{\"min_exclusive\":0.000000,\"max\":" + format_real(ParamRanges::kGaugeMax) + "}";
    out += ",\"bed\":{\"min_exclusive\":0.000000,\"max\":" + format_real(ParamRanges::kLengthMax) + "}";
    out += ",\"v\":{\"min_exclusive\":0.000000,\"max\":" + format_real(ParamRanges::kLengthMax) + "}";
    auto int_range = [](int lo, int hi) {
        return "{\"min\":" + std::to_string(lo) + ",\"max\":" + std::to_string(hi) + "}";
    };
    out += ",\"m\":" + int_range(ParamRanges::kFloatMin, ParamRanges::kFloatMax);
    out += ",\"n\":" + int_range(ParamRanges::kFloatMin, ParamRanges::kFloatMax);
    out += ",\"shift\":{\"min\":0,\"max_exclusive\":\"wales\"}";
    out += ",\"wales\":" + int_range(ParamRanges::kWalesMin, ParamRanges::kWalesMax);
    out += ",\"courses\":" + int_range(ParamRanges::kCoursesMin, ParamRanges::kCoursesMax);
    out += "}}";
    return out;
}

}  // namespace spacerfab::app
