#include "spacerfab/app/commands.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <system_error>

#include "spacerfab/errors.hpp"
#include "spacerfab/obj_export.hpp"
#include "spacerfab/scene_json.hpp"

namespace spacerfab::app {

namespace fs = std::filesystem;

void write_file_atomic(const fs::path& path, const std::string& content) {
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw CommandError("cannot open '" + tmp.string() + "' for writing");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.close();
        if (!out) {
            std::error_code ignored;
            fs::remove(tmp, ignored);
            throw CommandError("failed writing '" + tmp.string() + "'");
        }
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        std::error_code ignored;
        fs::remove(tmp, ignored);
        throw CommandError("cannot move output into place at '" + path.string() + "': " + ec.message());
    }
}

std::string read_text_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CommandError("cannot read '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string scene_text(const FabricSpec& spec, const std::string& version, int frame) {
    return encode_scene_json(generate_scene(spec, {version, frame}));
}

void cmd_generate(const FabricSpec& spec, const fs::path& out, const std::string& version) {
    write_file_atomic(out, scene_text(spec, version));
}

namespace {

std::string degrees_2dp(double radians) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", radians * 180.0 / std::numbers::pi);
    return buf;
}

void line(std::ostringstream& os, const std::string& label, const std::string& value) {
    os << label << " = " << value << '\n';
}

}  // namespace

std::string cmd_inspect(const FabricSpec& spec) {
    const Scene scene = generate_scene(spec);
    const PanelDistance distance = solve_panel_distance(spec);
    std::ostringstream os;
    line(os, "H_mm", format_real(spec.machine.stitch_width_mm));
    line(os, "V_mm", format_real(spec.machine.course_height_mm));
    line(os, "B_i_mm", format_real(spec.machine.bed_distance_mm));
    line(os, "sigma", format_real(spec.relax.sigma));
    line(os, "tau", format_real(spec.relax.tau));
    line(os, "B_actual_mm", format_real(scene.computed.b_actual));
    line(os, "limiting_family", std::to_string(distance.limiting_family));
    line(os, "equilibrium_residual_mm2", format_real(scene.computed.equilibrium_residual));
    line(os, "collisions", std::to_string(scene.collisions.size()));
    line(os, "families", std::to_string(spec.families.size()));
    for (std::size_t i = 0; i < spec.families.size(); ++i) {
        const SpacerFamilySpec& f = spec.families[i];
        line(os, "family", std::to_string(i));
        line(os, "orientation", to_string(f.orientation));
        line(os, "float_count", std::to_string(f.float_count));
        line(os, "wale_shift", std::to_string(f.wale_shift));
        line(os, "B_mm", format_real(scene.computed.b_per_family[i]));
        line(os, "inclination_deg", degrees_2dp(scene.computed.inclination_angles[i]));
        line(os, "strain", format_real(scene.computed.strains[i]));
    }
    return os.str();
}

std::string cmd_equilibrium(const FabricSpec& spec, SolveFor solve_for, int fallback_shift) {
    spec.validate();
    auto first_of = [&](SpacerOrientation o) {
        return std::find_if(spec.families.begin(), spec.families.end(),
                            [o](const SpacerFamilySpec& f) { return f.orientation == o; });
    };
    const auto horizontal = first_of(SpacerOrientation::course_parallel);
    const auto vertical = first_of(SpacerOrientation::wale_parallel);
    const char* name = solve_for == SolveFor::m ? "m" : "n";

    FloatCountSolution solution;
    try {
        if (solve_for == SolveFor::m) {
            if (vertical == spec.families.end()) {
                throw CommandError("solving for m needs a vertical (wale_parallel) family; pass --n");
            }
            solution = solve_float_count(*vertical, spec.machine, spec.relax, SolveFor::m);
        } else {
            if (horizontal == spec.families.end()) {
                throw CommandError("solving for n needs a horizontal (course_parallel) family");
            }
            const int shift = vertical != spec.families.end() ? vertical->wale_shift : fallback_shift;
            solution = solve_float_count(*horizontal, spec.machine, spec.relax, SolveFor::n, shift);
        }
    } catch (const DomainError& e) {
        throw CommandError(e.what());
    }
    if (!solution.feasible) throw CommandError(std::string("infeasible: ") + solution.reason);

    std::ostringstream os;
    line(os, "solve_for", name);
    if (spec.relax.sigma < 1.0) line(os, "equilibrium_ratio", format_real(equilibrium_ratio(spec.machine, spec.relax)));
    line(os, std::string(name) + "_real", format_real(solution.real_value));
    auto candidate = [&](const char* which, const std::optional<FloatCountCandidate>& c) {
        const std::string label = std::string(name) + "_" + which;
        if (!c) {
            line(os, label, "none");
            return;
        }
        line(os, label, std::to_string(c->float_count));
        line(os, label + "_residual_mm2", format_real(c->residual_mm2));
    };
    candidate("lower", solution.lower);
    candidate("upper", solution.upper);
    return os.str();
}

std::string frame_file_name(int index) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "frame_%04d.json", index);
    return buf;
}

std::vector<fs::path> cmd_animate(const FabricSpec& spec, double sigma_from, double sigma_to, int frames,
                                  const fs::path& out_dir, const std::string& version) {
    const AnimationSequence sequence = animate(spec, sigma_from, sigma_to, frames, version);
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) throw CommandError("cannot create '" + out_dir.string() + "': " + ec.message());
    std::vector<fs::path> written;
    for (std::size_t k = 0; k < sequence.frames.size(); ++k) {
        const fs::path path = out_dir / frame_file_name(static_cast<int>(k));
        write_file_atomic(path, encode_scene_json(sequence.frames[k]));
        written.push_back(path);
    }
    return written;
}

std::string export_text(const std::string& scene_json, const std::string& format, int tube_segments) {
    if (format != "obj") throw CommandError("unknown format '" + format + "'; supported: obj");
    const Scene scene = decode_scene_json(scene_json);
    return export_obj(scene, tube_segments > 0 ? tube_segments : scene.meta.spec.tube_segments);
}

void cmd_export(const fs::path& scene_path, const std::string& format, const fs::path& out, int tube_segments) {
    if (format != "obj") throw CommandError("unknown format '" + format + "'; supported: obj");
    write_file_atomic(out, export_text(read_text_file(scene_path), format, tube_segments));
}

}  // namespace spacerfab::app
