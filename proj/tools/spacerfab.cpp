#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "spacerfab/app/commands.hpp"
#include "spacerfab/app/params.hpp"
#include "spacerfab/app/service.hpp"
#include "spacerfab/errors.hpp"
#include "spacerfab/scene_json.hpp"

namespace {

using spacerfab::FabricSpec;
using spacerfab::app::FabricParams;

struct FabricOptions {
    FabricParams params;
    std::string spec_path;
    std::optional<int> n;
    std::optional<double> stitch_width;
    std::optional<double> override_distance;
};

void add_fabric_options(CLI::App* cmd, FabricOptions& o) {
    FabricParams& p = o.params;
    cmd->add_option("--gauge", p.gauge, "machine gauge, stitches per inch")->capture_default_str();
    cmd->add_option("--sigma", p.sigma, "horizontal shrink factor, (0, 1]")->capture_default_str();
    cmd->add_option("--tau", p.tau, "vertical shrink factor, (0, 1]")->capture_default_str();
    cmd->add_option("--bed", p.bed, "needle-bed distance B_i in mm")->capture_default_str();
    cmd->add_option("--v", p.v, "course height V in mm")->capture_default_str();
    cmd->add_option("--stitch-width", o.stitch_width, "stitch width H in mm (default 25.4 / gauge)");
    cmd->add_option("--wales", p.wales, "stitches per course")->capture_default_str();
    cmd->add_option("--courses", p.courses, "number of courses")->capture_default_str();
    cmd->add_option("--m", p.m, "float count of the horizontal spacer")->capture_default_str();
    cmd->add_option("--n", o.n, "float count of the vertical spacer (omit for none)");
    cmd->add_option("--shift", p.shift, "wale shift per hop of the vertical spacer")->capture_default_str();
    cmd->add_option("--loop-samples", p.loop_samples, "points per loop curve")->capture_default_str();
    cmd->add_option("--tube-segments", p.tube_segments, "tube cross-section segments")->capture_default_str();
    cmd->add_option("--panel-radius", p.panel_radius, "panel yarn radius in mm")->capture_default_str();
    cmd->add_option("--spacer-radius", p.spacer_radius, "spacer yarn radius in mm")->capture_default_str();
    cmd->add_option("--override", o.override_distance, "force the inter-panel distance in mm");
    cmd->add_option("--spec", o.spec_path, "fabric spec JSON file; replaces the fabric flags");
}

FabricSpec resolve_spec(const FabricOptions& o) {
    if (!o.spec_path.empty()) {
        return spacerfab::decode_fabric_spec_json(spacerfab::app::read_text_file(o.spec_path));
    }
    FabricParams p = o.params;
    p.n = o.n;
    p.stitch_width = o.stitch_width;
    p.override_distance = o.override_distance;
    return spacerfab::app::to_fabric_spec(p);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spacerfab: parametric geometry of weft-knitted spacer fabrics"};
    app.require_subcommand(1);

    FabricOptions generate_opts;
    std::string generate_out;
    std::string version = spacerfab::kToolVersion;
    auto* generate = app.add_subcommand("generate", "write the canonical scene JSON");
    add_fabric_options(generate, generate_opts);
    generate->add_option("-o,--out", generate_out, "output scene file")->required();
    generate->add_option("--version-string", version, "meta.version of the scene")->capture_default_str();

    FabricOptions inspect_opts;
    auto* inspect = app.add_subcommand("inspect", "print distances, residual, angles and strains");
    add_fabric_options(inspect, inspect_opts);

    FabricOptions equilibrium_opts;
    std::string solve_for;
    auto* equilibrium = app.add_subcommand("equilibrium", "solve the balancing float count");
    add_fabric_options(equilibrium, equilibrium_opts);
    equilibrium->add_option("--solve-for", solve_for, "m or n")->required()->check(CLI::IsMember({"m", "n"}));

    FabricOptions animate_opts;
    int frames = 10;
    double sigma_from = 1.0;
    double sigma_to = 0.98;
    std::string out_dir;
    auto* animate = app.add_subcommand("animate", "write a shrink animation as frame_NNNN.json files");
    add_fabric_options(animate, animate_opts);
    animate->add_option("--frames", frames, "number of frames")->capture_default_str();
    animate->add_option("--sigma-from", sigma_from, "first sigma")->capture_default_str();
    animate->add_option("--sigma-to", sigma_to, "last sigma")->capture_default_str();
    animate->add_option("-o,--out-dir", out_dir, "output directory")->required();
    animate->add_option("--version-string", version, "meta.version of the scenes")->capture_default_str();

    std::string scene_path;
    std::string format = "obj";
    std::string export_out;
    int export_segments = 0;
    auto* exporter = app.add_subcommand("export", "convert a scene file to a mesh");
    exporter->add_option("scene", scene_path, "scene JSON file")->required();
    exporter->add_option("--format", format, "mesh format (supported: obj)")->capture_default_str();
    exporter->add_option("-o,--out", export_out, "output mesh file")->required();
    exporter->add_option("--tube-segments", export_segments, "override the scene's tube segments");

    int port = 8080;
    std::string host = "127.0.0.1";
    auto* serve = app.add_subcommand("serve", "run the HTTP scene service");
    serve->add_option("--port", port, "listen port")->envname("SPACERFAB_PORT")->capture_default_str();
    serve->add_option("--host", host, "listen address")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*generate) {
            spacerfab::app::cmd_generate(resolve_spec(generate_opts), generate_out, version);
        } else if (*inspect) {
            std::cout << spacerfab::app::cmd_inspect(resolve_spec(inspect_opts));
        } else if (*equilibrium) {
            const auto target = solve_for == "m" ? spacerfab::SolveFor::m : spacerfab::SolveFor::n;
            std::cout << spacerfab::app::cmd_equilibrium(resolve_spec(equilibrium_opts), target,
                                                          equilibrium_opts.params.shift);
        } else if (*animate) {
            spacerfab::app::cmd_animate(resolve_spec(animate_opts), sigma_from, sigma_to, frames, out_dir, version);
        } else if (*exporter) {
            spacerfab::app::cmd_export(scene_path, format, export_out, export_segments);
        } else if (*serve) {
            spacerfab::app::SceneService service;
            const int bound = service.bind(host, port);
            if (bound < 0) {
                std::cerr << "error: port: cannot listen on " << host << ":" << port << "\n";
                return 1;
            }
            std::cerr << "serving on http://" << host << ":" << bound << "\n";
            return service.listen() ? 0 : 1;
        }
    } catch (const spacerfab::ParameterError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const spacerfab::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
