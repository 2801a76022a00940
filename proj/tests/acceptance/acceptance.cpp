#include <httplib.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <functional>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "spacerfab/app/commands.hpp"
#include "spacerfab/app/params.hpp"
#include "spacerfab/app/service.hpp"
#include "spacerfab/collision.hpp"
#include "spacerfab/fabric.hpp"
#include "spacerfab/obj_export.hpp"
#include "spacerfab/scene.hpp"
#include "spacerfab/scene_json.hpp"
#include "spacerfab/spacer_math.hpp"
#include "spacerfab/strain_color.hpp"

#include "cli_runner.hpp"
#include "collision_oracle.hpp"
#include "random_fabric.hpp"

using namespace spacerfab;
namespace fs = std::filesystem;

namespace {

struct Failure {
    std::string message;
};

void require(bool ok, const std::string& message) {
    if (!ok) throw Failure{message};
}

std::string fmt(const char* format, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, format, a, b, c);
    return buf;
}

struct Criterion {
    const char* id;
    const char* title;
    double limit_s;
    std::function<std::string()> run;  // returns a short summary on success
};

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& tag) {
        path = fs::temp_directory_path() / ("spacerfab_acceptance_" + tag + "_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
};

int lerp_channel(int a, int b, double t) { return static_cast<int>(std::lround(a + (b - a) * t)); }

Rgb expected_ramp(double strain) {
    const Rgb gray{150, 150, 150}, yellow{255, 210, 0}, red{255, 0, 0};
    auto mix = [](Rgb a, Rgb b, double t) {
        return Rgb{lerp_channel(a.r, b.r, t), lerp_channel(a.g, b.g, t), lerp_channel(a.b, b.b, t)};
    };
    if (strain <= 0.95) return gray;
    if (strain < 1.0) return mix(gray, yellow, (strain - 0.95) / 0.05);
    if (strain < 1.10) return mix(yellow, red, (strain - 1.0) / 0.10);
    return red;
}

std::size_t spacer_yarn_index(const FabricSpec& spec, std::size_t family) {
    return 2 * static_cast<std::size_t>(spec.courses) + family;
}

std::string ac1() {
    testing::Draw draw(101);
    for (int i = 0; i < 100; ++i) {
        const MachineGeometry machine = draw.machine();
        SpacerFamilySpec family = draw.course_family(8);
        if (draw.coin()) {
            family.orientation = SpacerOrientation::wale_parallel;
            family.wale_shift = draw.integer(0, 3);
        }
        const RelaxationState rest{1.0, 1.0};
        const double b = inter_panel_distance(family, machine, rest);
        require(std::memcmp(&b, &machine.bed_distance_mm, sizeof b) == 0,
                fmt("draw %.0f: B(1) = %.17g differs from B_i", i, b));
    }
    return "100 draws, bitwise equal";
}

std::string ac2() {
    testing::Draw draw(202);
    std::vector<double> grid;
    for (int k = 0; k <= 20; ++k) grid.push_back(1.0 - 0.005 * k);
    double smallest_gap = INFINITY;
    for (int i = 0; i < 50; ++i) {
        FabricSpec spec = draw.fabric(true, true);
        double previous = -INFINITY;
        for (double sigma : grid) {
            spec.relax.sigma = sigma;
            const double b = solve_panel_distance(spec).b_actual;
            if (previous != -INFINITY) {
                const double gap = b - previous;
                smallest_gap = std::min(smallest_gap, gap);
                require(gap >= 1e-12, fmt("config %.0f: b rise %.3g at sigma %.3f", i, gap, sigma));
            }
            previous = b;
        }
    }
    return fmt("50 configs x 21 sigmas, min rise %.3g mm", smallest_gap);
}

std::string ac3() {
    testing::Draw draw(303);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const FabricSpec spec = draw.fabric();
        const Scene scene = generate_scene(spec);
        const std::size_t limiting = solve_panel_distance(spec).limiting_family;
        const SceneYarn& yarn = scene.yarns.at(spacer_yarn_index(spec, limiting));
        const auto pts = yarn.yarn.path.points();
        const double chord = distance(pts[2], pts[3]);
        const double rest = triangle_for_family(spec.families[limiting], spec.machine, spec.relax).c_rest;
        const double err = std::max(std::abs(chord / rest - 1.0), std::abs(*yarn.strain - 1.0));
        worst = std::max(worst, err);
        require(err <= 1e-9, fmt("spec %.0f: limiting strain off by %.3g", i, err));
    }
    return fmt("1000 specs, max |strain - 1| = %.3g", worst);
}

std::string ac4() {
    testing::Draw draw(404);
    double worst_residual = 0.0, worst_gap = 0.0;
    for (int i = 0; i < 200; ++i) {
        MachineGeometry machine = draw.machine();
        const RelaxationState relax{draw.real(0.85, 0.999), draw.real(0.85, 0.999)};
        const int m = draw.integer(1, 6);
        const int n = draw.integer(1, 6);
        machine.stitch_width_mm = machine.course_height_mm * (static_cast<double>(n) / m) *
                                  std::sqrt((1.0 - relax.tau * relax.tau) / (1.0 - relax.sigma * relax.sigma));
        SpacerFamilySpec h;
        h.float_count = m;
        SpacerFamilySpec v;
        v.orientation = SpacerOrientation::wale_parallel;
        v.float_count = n;
        const double ratio = equilibrium_ratio(machine, relax);
        require(std::abs(ratio - static_cast<double>(m) / n) <= 1e-12 * ratio,
                fmt("draw %.0f: ratio %.17g", i, ratio));
        const double residual = equilibrium_residual(h, v, machine, relax);
        worst_residual = std::max(worst_residual, std::abs(residual));
        require(std::abs(residual) < 1e-12, fmt("draw %.0f: residual %.3g", i, residual));
        const double gap = std::abs(inter_panel_distance(h, machine, relax) - inter_panel_distance(v, machine, relax));
        worst_gap = std::max(worst_gap, gap / machine.bed_distance_mm);
        require(gap <= 1e-9 * machine.bed_distance_mm, fmt("draw %.0f: |B_h - B_v| = %.3g", i, gap));
        const FloatCountSolution sol = solve_float_count(v, machine, relax, SolveFor::m);
        require(sol.feasible && sol.lower && sol.lower->float_count == m,
                fmt("draw %.0f: solver returned m = %.17g", i, sol.real_value));
    }
    return fmt("200 draws, max |residual| %.3g mm^2, max gap/B_i %.3g", worst_residual, worst_gap);
}

std::string ac5() {
    testing::Draw draw(505);
    const double h = 1e-6;
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        const MachineGeometry machine = draw.machine();
        SpacerFamilySpec family = draw.course_family(8);
        if (draw.coin()) {
            family.orientation = SpacerOrientation::wale_parallel;
            family.wale_shift = draw.integer(1, 3);
        }
        const RelaxationState relax{draw.real(0.85, 1.0 - 1e-5), draw.real(0.85, 1.0)};
        const RelaxationState up{relax.sigma + h, relax.tau};
        const RelaxationState down{relax.sigma - h, relax.tau};
        const double fd =
            (inter_panel_distance(family, machine, up) - inter_panel_distance(family, machine, down)) / (2.0 * h);
        const double analytic = db_dsigma(family, machine, relax);
        const double rel = std::abs(analytic - fd) / std::abs(fd);
        worst = std::max(worst, rel);
        require(rel <= 1e-6, fmt("draw %.0f: relative error %.3g", i, rel));
    }
    return fmt("200 draws, max relative error %.3g", worst);
}

std::string ac6() {
    TempDir dir("ac6");
    const FabricSpec base = app::to_fabric_spec(app::FabricParams{});
    double b_values[2] = {0.0, 0.0};
    const char* sigmas[2] = {"1.00", "0.98"};
    for (int k = 0; k < 2; ++k) {
        const std::string tag = std::string("sigma_") + sigmas[k];
        const fs::path first = dir.path / (tag + "_a.json");
        const fs::path second = dir.path / (tag + "_b.json");
        for (const fs::path& out : {first, second}) {
            const auto r = testing::run_cli(std::string("generate --sigma ") + sigmas[k] + " -o " + out.string());
            require(r.status == 0, "generate failed: " + r.output);
        }
        const std::string text = app::read_text_file(first);
        require(text == app::read_text_file(second), tag + ": two runs differ");
        const fs::path golden = fs::path(SPACERFAB_GOLDEN_DIR) / ("default_" + tag + ".json");
        require(text == app::read_text_file(golden), tag + ": differs from " + golden.filename().string());

        const Scene scene = decode_scene_json(text);
        std::size_t lower = 0, upper = 0;
        std::vector<const SceneYarn*> spacers;
        for (const SceneYarn& y : scene.yarns) {
            if (y.yarn.role == YarnRole::panel_lower) ++lower;
            if (y.yarn.role == YarnRole::panel_upper) ++upper;
            if (y.yarn.role == YarnRole::spacer_h || y.yarn.role == YarnRole::spacer_v) spacers.push_back(&y);
        }
        require(lower == static_cast<std::size_t>(base.courses) && upper == lower, tag + ": panel yarn counts");
        require(spacers.size() == 1 && spacers[0]->yarn.role == YarnRole::spacer_h, tag + ": expected one spacer_h");
        require(spacers[0]->yarn.color == kSpacerRestColor, tag + ": spacer not yellow at rest");

        const double b = scene.computed.b_actual;
        const double pitch = 2.0 * scene.meta.spec.relax.sigma * scene.meta.spec.machine.stitch_width_mm;
        const auto pts = spacers[0]->yarn.path.points();
        require(pts.size() >= 6 && pts.size() % 3 == 0, tag + ": spacer hook layout");
        for (std::size_t a = 0; a + 1 < pts.size() / 3; ++a) {
            const Point3 p = pts[3 * a];
            const Point3 q = pts[3 * (a + 1)];
            require(std::abs((q.x - p.x) - pitch) <= 1e-5, tag + ": anchors not 2 stitches apart");
            const double z_expected = a % 2 == 0 ? 0.0 : b;
            require(std::abs(p.z - z_expected) <= 1e-5 && std::abs(q.z - (b - z_expected)) <= 1e-5,
                    tag + ": anchors do not alternate panels");
        }
        b_values[k] = b;
    }
    require(b_values[1] > b_values[0], "b_actual(0.98) not above b_actual(1.0)");
    return fmt("b(1.0) = %.6f, b(0.98) = %.6f, goldens match", b_values[0], b_values[1]);
}

std::string ac7() {
    testing::Draw draw(707);
    int checked = 0;
    for (int i = 0; i < 20; ++i) {
        FabricSpec spec = i == 0 ? app::to_fabric_spec(app::FabricParams{}) : draw.fabric();
        const auto per_family = solve_panel_distance(spec).b_per_family;
        const auto [lowest, highest] = std::minmax_element(per_family.begin(), per_family.end());
        for (double factor : {1.10, 0.90}) {
            spec.spacer_override_distance_mm = factor * (factor > 1.0 ? *highest : *lowest);
            const Scene scene = generate_scene(spec);
            for (std::size_t f = 0; f < spec.families.size(); ++f) {
                const SceneYarn& y = scene.yarns.at(spacer_yarn_index(spec, f));
                const double strain = *y.strain;
                if (factor > 1.0) {
                    require(strain > 1.0, fmt("spec %.0f family %.0f: strain %.9f not > 1", i, f, strain));
                } else {
                    require(strain < 1.0, fmt("spec %.0f family %.0f: strain %.9f not < 1", i, f, strain));
                }
                const Rgb expected = expected_ramp(strain);
                require(y.yarn.color == expected, fmt("spec %.0f family %.0f: color mismatch at strain %.9f", i, f, strain));
                if (factor < 1.0) {
                    const Rgb c = y.yarn.color;
                    require(c.r >= 150 && c.r <= 255 && c.g >= 150 && c.g <= 210 && c.b > 0 && c.b <= 150,
                            "slack color outside gray-yellow band");
                }
                ++checked;
            }
        }
    }
    return fmt("%.0f spacer colors checked at +10%% and -10%% override", checked);
}

std::string ac8() {
    testing::Draw draw(808);
    for (int i = 0; i < 20; ++i) {
        const Scene scene = generate_scene(draw.fabric());
        const std::string once = encode_scene_json(scene);
        const std::string twice = encode_scene_json(decode_scene_json(once));
        require(once == twice, fmt("scene %.0f: round trip not byte-identical", i));
    }

    TempDir dir("ac8");
    const fs::path cli_out = dir.path / "cli.json";
    const auto r = testing::run_cli("generate --sigma 0.97 --n 2 --shift 1 -o " + cli_out.string());
    require(r.status == 0, "generate failed: " + r.output);
    const std::string cli_text = app::read_text_file(cli_out);
    const app::HttpResult handled = app::handle_get("/scene", {{"sigma", "0.97"}, {"n", "2"}, {"shift", "1"}});
    require(handled.status == 200 && handled.body == cli_text, "CLI and service handler differ");

    app::SceneService service;
    const int port = service.bind("127.0.0.1", 0);
    std::thread server([&] { service.listen(); });
    httplib::Client client("127.0.0.1", port);
    auto res = client.Get("/scene?sigma=0.97&n=2&shift=1");
    service.stop();
    server.join();
    require(res && res->status == 200, "HTTP request failed");
    require(res->body == cli_text, "CLI and HTTP response differ");

    const Scene scene = decode_scene_json(cli_text);
    for (int segments : {4, 8, 12}) {
        const std::string obj = export_obj(scene, segments);
        std::size_t v = 0, f = 0, o = 0, expected_v = 0, expected_f = 0;
        std::size_t pos = 0;
        while (pos < obj.size()) {
            const std::size_t end = obj.find('\n', pos);
            const std::string line = obj.substr(pos, end - pos);
            if (line.rfind("v ", 0) == 0) ++v;
            if (line.rfind("f ", 0) == 0) ++f;
            if (line.rfind("o ", 0) == 0) ++o;
            pos = end == std::string::npos ? obj.size() : end + 1;
        }
        for (const SceneYarn& y : scene.yarns) {
            const std::size_t p = y.yarn.path.points().size();
            expected_v += p * segments;
            expected_f += 2 * (p - 1) * segments;
        }
        require(o == scene.yarns.size(), "OBJ object count");
        require(v == expected_v && f == expected_f,
                fmt("OBJ counts v=%.0f f=%.0f at %.0f segments", v, f, segments));
    }
    return "round trip, CLI = handler = HTTP, OBJ counts at 4/8/12 segments";
}

std::vector<StrainedSpacer> random_scene(testing::Draw& draw, int families, int segments_each, double box) {
    std::vector<StrainedSpacer> out;
    for (int f = 0; f < families; ++f) {
        std::vector<Point3> pts;
        for (int k = 0; k <= segments_each; ++k) {
            pts.push_back({draw.real(0, box), draw.real(0, box), draw.real(0, box)});
        }
        out.push_back(testing::spacer_from(pts, draw.real(0.05, 0.3)));
        out.back().family_index = static_cast<std::size_t>(f);
    }
    return out;
}

bool same_records(const std::vector<CollisionRecord>& a, const std::vector<CollisionRecord>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].family_a != b[i].family_a || a[i].family_b != b[i].family_b || a[i].segment_a != b[i].segment_a ||
            a[i].segment_b != b[i].segment_b || std::abs(a[i].distance - b[i].distance) > 1e-9) {
            return false;
        }
    }
    return true;
}

std::string ac9() {
    testing::Draw draw(909);
    std::size_t total = 0;
    for (int i = 0; i < 100; ++i) {
        const int families = draw.coin() ? 4 : 2;
        const auto spacers = random_scene(draw, families, 20 / families, 3.0);
        const auto found = detect_collisions(spacers, 0.0);
        require(same_records(found, testing::oracle_collisions(spacers, 0.0)),
                fmt("scene %.0f: detector disagrees with oracle", i));
        const double clearance = draw.real(0.0, 0.5);
        require(same_records(detect_collisions(spacers, clearance), testing::oracle_collisions(spacers, clearance)),
                fmt("scene %.0f: disagreement at clearance %.3f", i, clearance));
        total += found.size();

        std::vector<StrainedSpacer> reversed(spacers.rbegin(), spacers.rend());
        auto swapped = detect_collisions(reversed, 0.0);
        const std::size_t last = spacers.size() - 1;
        for (CollisionRecord& c : swapped) {
            c = {last - c.family_b, last - c.family_a, c.segment_b, c.segment_a, c.distance};
        }
        std::sort(swapped.begin(), swapped.end(), [](const CollisionRecord& a, const CollisionRecord& b) {
            return std::tie(a.family_a, a.family_b, a.segment_a, a.segment_b) <
                   std::tie(b.family_a, b.family_b, b.segment_a, b.segment_b);
        });
        require(same_records(found, swapped), fmt("scene %.0f: not symmetric under family swap", i));

        auto separated = random_scene(draw, families, 20 / families, 3.0);
        for (std::size_t f = 0; f < separated.size(); ++f) {
            std::vector<Point3> shifted(separated[f].yarn.path.points().begin(), separated[f].yarn.path.points().end());
            for (Point3& p : shifted) p.x += 10.0 * static_cast<double>(f);
            separated[f] = testing::spacer_from(shifted, separated[f].yarn.radius_mm);
        }
        require(detect_collisions(separated, 0.0).empty(), fmt("scene %.0f: separated scene collides", i));
    }
    return fmt("100 scenes, %.0f collisions matched", static_cast<double>(total));
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"AC1", "B(sigma = 1) equals B_i exactly", 1.0, ac1},
        {"AC2", "b_actual strictly rises as sigma falls", 5.0, ac2},
        {"AC3", "limiting family chord equals rest length", 30.0, ac3},
        {"AC4", "equilibrium ratio balances both families", 10.0, ac4},
        {"AC5", "db/dsigma matches central differences", 1.0, ac5},
        {"AC6", "default scenes at sigma 1.0 and 0.98 with golden files", 1.0, ac6},
        {"AC7", "strain colors under stretched and slack overrides", 1.0, ac7},
        {"AC8", "round trip, CLI vs service, OBJ counts", 5.0, ac8},
        {"AC9", "collision detector vs closest-point oracle", 10.0, ac9},
    };
    int failures = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = true;
        try {
            detail = c.run();
        } catch (const Failure& f) {
            ok = false;
            detail = f.message;
        } catch (const std::exception& e) {
            ok = false;
            detail = std::string("exception: ") + e.what();
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (ok && seconds > c.limit_s) {
            ok = false;
            detail += fmt("; runtime %.3f s over limit %.0f s", seconds, c.limit_s);
        }
        if (!ok) ++failures;
        std::printf("[%s] %s %s: %s (%.0f ms, limit %.0f s)\n", ok ? "PASS" : "FAIL", c.id, c.title, detail.c_str(),
                    seconds * 1000.0, c.limit_s);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
