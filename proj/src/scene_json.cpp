#include "spacerfab/scene_json.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <tuple>
#include <json.hpp>

#include "spacerfab/errors.hpp"

namespace spacerfab {

using nlohmann::json;

std::string format_real(double value) {
    if (!std::isfinite(value)) throw DomainError("cannot encode a non-finite real");
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", value);
    std::string text(buf);
    if (text == "-0.000000") text = "0.000000";
    return text;
}

namespace {

// Appends compact JSON in caller-controlled key order.
class CanonicalWriter {
public:
    void begin_object() { open('{'); }
    void end_object() { close('}'); }
    void begin_array() { open('['); }
    void end_array() { close(']'); }

    void key(std::string_view name) {
        separate();
        out_ += json(std::string(name)).dump();
        out_ += ':';
        after_key_ = true;
    }

    void real(double v) { value(format_real(v)); }
    void integer(long long v) { value(std::to_string(v)); }
    void string(std::string_view s) { value(json(std::string(s)).dump()); }
    void null() { value("null"); }

    std::string take() { return std::move(out_); }

private:
    void separate() {
        if (after_key_) {
            after_key_ = false;
            return;
        }
        if (!first_.empty()) {
            if (!first_.back()) out_ += ',';
            first_.back() = false;
        }
    }
    void open(char c) {
        separate();
        out_ += c;
        first_.push_back(true);
    }
    void close(char c) {
        first_.pop_back();
        out_ += c;
    }
    void value(const std::string& text) {
        separate();
        out_ += text;
    }

    std::string out_;
    std::vector<bool> first_;
    bool after_key_ = false;
};

void write_reals(CanonicalWriter& w, const std::vector<double>& values) {
    w.begin_array();
    for (double v : values) w.real(v);
    w.end_array();
}

void write_spec(CanonicalWriter& w, const FabricSpec& spec) {
    w.begin_object();
    w.key("gauge"); w.real(spec.machine.gauge);
    w.key("stitch_width"); w.real(spec.machine.stitch_width_mm);
    w.key("course_height"); w.real(spec.machine.course_height_mm);
    w.key("bed_distance"); w.real(spec.machine.bed_distance_mm);
    w.key("sigma"); w.real(spec.relax.sigma);
    w.key("tau"); w.real(spec.relax.tau);
    w.key("wales"); w.integer(spec.wales);
    w.key("courses"); w.integer(spec.courses);
    w.key("loop_samples"); w.integer(spec.loop_samples);
    w.key("tube_segments"); w.integer(spec.tube_segments);
    w.key("panel_yarn_radius"); w.real(spec.panel_yarn_radius_mm);
    w.key("spacer_override_distance");
    if (spec.spacer_override_distance_mm) {
        w.real(*spec.spacer_override_distance_mm);
    } else {
        w.null();
    }
    w.key("families");
    w.begin_array();
    for (const SpacerFamilySpec& f : spec.families) {
        w.begin_object();
        w.key("orientation"); w.string(to_string(f.orientation));
        w.key("float_count"); w.integer(f.float_count);
        w.key("wale_shift"); w.integer(f.wale_shift);
        w.key("start_wale"); w.integer(f.start_wale);
        w.key("start_course"); w.integer(f.start_course);
        w.key("yarn_radius"); w.real(f.yarn_radius_mm);
        w.end_object();
    }
    w.end_array();
    w.end_object();
}

// --- decoding -------------------------------------------------------------

std::string join(const std::string& path, std::string_view key) {
    return path.empty() ? std::string(key) : path + "." + std::string(key);
}

std::string index(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

const json& member(const json& object, const std::string& path, std::string_view key) {
    const auto it = object.find(std::string(key));
    if (it == object.end()) throw ParseError(join(path, key), "missing required key");
    return *it;
}

const json& expect_object(const json& v, const std::string& path) {
    if (!v.is_object()) throw ParseError(path.empty() ? "$" : path, "expected an object");
    return v;
}

const json& expect_array(const json& v, const std::string& path) {
    if (!v.is_array()) throw ParseError(path, "expected an array");
    return v;
}

double as_real(const json& v, const std::string& path) {
    if (!v.is_number()) throw ParseError(path, "expected a number");
    return v.get<double>();
}

long long as_integer(const json& v, const std::string& path) {
    if (!v.is_number_integer()) throw ParseError(path, "expected an integer");
    return v.get<long long>();
}

int as_int(const json& v, const std::string& path) {
    const long long x = as_integer(v, path);
    if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max()) {
        throw ParseError(path, "integer out of range");
    }
    return static_cast<int>(x);
}

std::size_t as_index(const json& v, const std::string& path) {
    const long long x = as_integer(v, path);
    if (x < 0) throw ParseError(path, "expected a non-negative integer");
    return static_cast<std::size_t>(x);
}

std::string as_string(const json& v, const std::string& path) {
    if (!v.is_string()) throw ParseError(path, "expected a string");
    return v.get<std::string>();
}

std::vector<double> as_reals(const json& v, const std::string& path) {
    expect_array(v, path);
    std::vector<double> out;
    out.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(as_real(v[i], index(path, i)));
    return out;
}

// Reads `key` if present (or throws when strict), leaving `target` untouched otherwise.
template <typename Reader, typename T>
void read_field(const json& object, const std::string& path, std::string_view key, bool strict, Reader reader,
                T& target) {
    const auto it = object.find(std::string(key));
    if (it == object.end()) {
        if (strict) throw ParseError(join(path, key), "missing required key");
        return;
    }
    target = reader(*it, join(path, key));
}

FabricSpec read_spec(const json& v, const std::string& path, bool strict) {
    expect_object(v, path);
    FabricSpec spec;
    read_field(v, path, "gauge", strict, as_real, spec.machine.gauge);
    // the stitch width tracks the gauge unless given explicitly
    spec.machine.stitch_width_mm = spec.machine.gauge > 0.0 ? kMillimetresPerInch / spec.machine.gauge : 0.0;
    double stitch_width = spec.machine.stitch_width_mm;
    read_field(v, path, "stitch_width", strict, as_real, stitch_width);
    // six-decimal echo of a gauge-derived width decodes to the exact width
    if (std::abs(stitch_width - spec.machine.stitch_width_mm) > 5e-7) spec.machine.stitch_width_mm = stitch_width;
    read_field(v, path, "course_height", strict, as_real, spec.machine.course_height_mm);
    read_field(v, path, "bed_distance", strict, as_real, spec.machine.bed_distance_mm);
    read_field(v, path, "sigma", strict, as_real, spec.relax.sigma);
    read_field(v, path, "tau", strict, as_real, spec.relax.tau);
    read_field(v, path, "wales", strict, as_int, spec.wales);
    read_field(v, path, "courses", strict, as_int, spec.courses);
    read_field(v, path, "loop_samples", strict, as_int, spec.loop_samples);
    read_field(v, path, "tube_segments", strict, as_int, spec.tube_segments);
    read_field(v, path, "panel_yarn_radius", strict, as_real, spec.panel_yarn_radius_mm);
    {
        const auto it = v.find("spacer_override_distance");
        if (it == v.end()) {
            if (strict) throw ParseError(join(path, "spacer_override_distance"), "missing required key");
        } else if (!it->is_null()) {
            spec.spacer_override_distance_mm = as_real(*it, join(path, "spacer_override_distance"));
        }
    }

    const std::string families_path = join(path, "families");
    const json& families = expect_array(member(v, path, "families"), families_path);
    for (std::size_t i = 0; i < families.size(); ++i) {
        const std::string fp = index(families_path, i);
        const json& fv = expect_object(families[i], fp);
        SpacerFamilySpec family;
        std::string orientation = to_string(family.orientation);
        read_field(fv, fp, "orientation", strict, as_string, orientation);
        const auto parsed = orientation_from_string(orientation);
        if (!parsed) throw ParseError(join(fp, "orientation"), "expected course_parallel or wale_parallel");
        family.orientation = *parsed;
        read_field(fv, fp, "float_count", strict, as_int, family.float_count);
        read_field(fv, fp, "wale_shift", strict, as_int, family.wale_shift);
        read_field(fv, fp, "start_wale", strict, as_int, family.start_wale);
        read_field(fv, fp, "start_course", strict, as_int, family.start_course);
        read_field(fv, fp, "yarn_radius", strict, as_real, family.yarn_radius_mm);
        spec.families.push_back(family);
    }
    try {
        spec.validate();
    } catch (const ParameterError& e) {
        throw ParseError(path.empty() ? "$" : path, e.what());
    }
    return spec;
}

json parse_document(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError("$", std::string("malformed JSON: ") + e.what());
    }
}

Rgb read_color(const json& v, const std::string& path) {
    expect_array(v, path);
    if (v.size() != 3) throw ParseError(path, "expected [r, g, b]");
    int c[3];
    for (std::size_t i = 0; i < 3; ++i) {
        c[i] = as_int(v[i], index(path, i));
        if (c[i] < 0 || c[i] > 255) throw ParseError(index(path, i), "channel outside 0..255");
    }
    return {c[0], c[1], c[2]};
}

std::pair<std::size_t, std::size_t> read_pair(const json& v, const std::string& path) {
    expect_array(v, path);
    if (v.size() != 2) throw ParseError(path, "expected two entries");
    return {as_index(v[0], index(path, 0)), as_index(v[1], index(path, 1))};
}

}  // namespace

std::string encode_fabric_spec_json(const FabricSpec& spec) {
    CanonicalWriter w;
    write_spec(w, spec);
    return w.take();
}

FabricSpec decode_fabric_spec_json(std::string_view text, bool strict) {
    return read_spec(parse_document(text), "", strict);
}

std::string encode_scene_json(const Scene& scene) {
    CanonicalWriter w;
    w.begin_object();

    w.key("meta");
    w.begin_object();
    w.key("version"); w.string(scene.meta.version);
    w.key("spec"); write_spec(w, scene.meta.spec);
    w.key("frame"); w.integer(scene.meta.frame);
    w.end_object();

    w.key("computed");
    w.begin_object();
    w.key("b_per_family"); write_reals(w, scene.computed.b_per_family);
    w.key("b_actual"); w.real(scene.computed.b_actual);
    w.key("equilibrium_residual"); w.real(scene.computed.equilibrium_residual);
    w.key("inclination_angles"); write_reals(w, scene.computed.inclination_angles);
    w.key("strains"); write_reals(w, scene.computed.strains);
    w.end_object();

    w.key("yarns");
    w.begin_array();
    for (const SceneYarn& y : scene.yarns) {
        w.begin_object();
        w.key("role"); w.string(to_string(y.yarn.role));
        w.key("color");
        w.begin_array();
        w.integer(y.yarn.color.r);
        w.integer(y.yarn.color.g);
        w.integer(y.yarn.color.b);
        w.end_array();
        w.key("radius"); w.real(y.yarn.radius_mm);
        if (y.strain) {
            w.key("strain");
            w.real(*y.strain);
        }
        w.key("points");
        w.begin_array();
        for (const Point3& p : y.yarn.path.points()) {
            w.begin_array();
            w.real(p.x);
            w.real(p.y);
            w.real(p.z);
            w.end_array();
        }
        w.end_array();
        w.end_object();
    }
    w.end_array();

    w.key("collisions");
    w.begin_array();
    for (const CollisionRecord& c : scene.collisions) {
        w.begin_object();
        w.key("families");
        w.begin_array();
        w.integer(static_cast<long long>(c.family_a));
        w.integer(static_cast<long long>(c.family_b));
        w.end_array();
        w.key("segments");
        w.begin_array();
        w.integer(static_cast<long long>(c.segment_a));
        w.integer(static_cast<long long>(c.segment_b));
        w.end_array();
        w.key("distance"); w.real(c.distance);
        w.end_object();
    }
    w.end_array();

    w.end_object();
    return w.take();
}

Scene decode_scene_json(std::string_view text) {
    const json doc = parse_document(text);
    expect_object(doc, "");
    Scene scene;

    const json& meta = expect_object(member(doc, "", "meta"), "meta");
    scene.meta.version = as_string(member(meta, "meta", "version"), "meta.version");
    scene.meta.spec = read_spec(member(meta, "meta", "spec"), "meta.spec", true);
    scene.meta.frame = as_int(member(meta, "meta", "frame"), "meta.frame");

    const json& computed = expect_object(member(doc, "", "computed"), "computed");
    scene.computed.b_per_family = as_reals(member(computed, "computed", "b_per_family"), "computed.b_per_family");
    scene.computed.b_actual = as_real(member(computed, "computed", "b_actual"), "computed.b_actual");
    scene.computed.equilibrium_residual =
        as_real(member(computed, "computed", "equilibrium_residual"), "computed.equilibrium_residual");
    scene.computed.inclination_angles =
        as_reals(member(computed, "computed", "inclination_angles"), "computed.inclination_angles");
    scene.computed.strains = as_reals(member(computed, "computed", "strains"), "computed.strains");

    const json& yarns = expect_array(member(doc, "", "yarns"), "yarns");
    for (std::size_t i = 0; i < yarns.size(); ++i) {
        const std::string yp = index("yarns", i);
        const json& yv = expect_object(yarns[i], yp);
        SceneYarn y;
        const std::string role = as_string(member(yv, yp, "role"), yp + ".role");
        const auto parsed_role = yarn_role_from_string(role);
        if (!parsed_role) throw ParseError(yp + ".role", "unknown yarn role '" + role + "'");
        y.yarn.role = *parsed_role;
        y.yarn.color = read_color(member(yv, yp, "color"), yp + ".color");
        y.yarn.radius_mm = as_real(member(yv, yp, "radius"), yp + ".radius");
        if (!(y.yarn.radius_mm > 0.0)) throw ParseError(yp + ".radius", "must be > 0");
        if (const auto it = yv.find("strain"); it != yv.end()) y.strain = as_real(*it, yp + ".strain");

        const std::string pp = yp + ".points";
        const json& points = expect_array(member(yv, yp, "points"), pp);
        std::vector<Point3> pts;
        pts.reserve(points.size());
        for (std::size_t k = 0; k < points.size(); ++k) {
            const std::vector<double> xyz = as_reals(points[k], index(pp, k));
            if (xyz.size() != 3) throw ParseError(index(pp, k), "expected [x, y, z]");
            pts.push_back({xyz[0], xyz[1], xyz[2]});
        }
        try {
            y.yarn.path = Polyline3(std::move(pts));
        } catch (const GeometryError& e) {
            throw ParseError(pp, e.what());
        }
        scene.yarns.push_back(std::move(y));
    }

    const json& collisions = expect_array(member(doc, "", "collisions"), "collisions");
    for (std::size_t i = 0; i < collisions.size(); ++i) {
        const std::string cp = index("collisions", i);
        const json& cv = expect_object(collisions[i], cp);
        CollisionRecord c;
        std::tie(c.family_a, c.family_b) = read_pair(member(cv, cp, "families"), cp + ".families");
        std::tie(c.segment_a, c.segment_b) = read_pair(member(cv, cp, "segments"), cp + ".segments");
        c.distance = as_real(member(cv, cp, "distance"), cp + ".distance");
        scene.collisions.push_back(c);
    }
    return scene;
}

}  // namespace spacerfab
