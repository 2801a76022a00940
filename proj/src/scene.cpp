#include "spacerfab/scene.hpp"

#include <algorithm>
#include <cmath>

#include "spacerfab/errors.hpp"

namespace spacerfab {

namespace {

double first_pair_residual(const FabricSpec& spec) {
    const auto horizontal = std::find_if(spec.families.begin(), spec.families.end(), [](const auto& f) {
        return f.orientation == SpacerOrientation::course_parallel;
    });
    const auto vertical = std::find_if(spec.families.begin(), spec.families.end(), [](const auto& f) {
        return f.orientation == SpacerOrientation::wale_parallel;
    });
    if (horizontal == spec.families.end() || vertical == spec.families.end()) return 0.0;
    return equilibrium_residual(*horizontal, *vertical, spec.machine, spec.relax);
}

}  // namespace

Scene generate_scene(const FabricSpec& spec, const SceneOptions& options) {
    spec.validate();
    const PanelDistance distance = solve_panel_distance(spec);

    Scene scene;
    scene.meta.version = options.version;
    scene.meta.spec = spec;
    scene.meta.frame = options.frame;

    scene.computed.b_per_family = distance.b_per_family;
    scene.computed.b_actual = distance.b_actual;
    scene.computed.equilibrium_residual = first_pair_residual(spec);
    for (const SpacerFamilySpec& family : spec.families) {
        scene.computed.inclination_angles.push_back(
            inclination_angle(triangle_for_family(family, spec.machine, spec.relax)));
    }

    for (auto& yarn : build_panel(spec, PanelSide::lower, 0.0)) scene.yarns.push_back({std::move(yarn), {}});
    for (auto& yarn : build_panel(spec, PanelSide::upper, distance.b_actual)) {
        scene.yarns.push_back({std::move(yarn), {}});
    }
    const std::vector<StrainedSpacer> spacers = build_spacer_paths(spec, distance.b_actual);
    for (const StrainedSpacer& spacer : spacers) {
        scene.computed.strains.push_back(spacer.strain);
        scene.yarns.push_back({spacer.yarn, spacer.strain});
    }
    scene.collisions = detect_collisions(spacers, 0.0);
    return scene;
}

std::vector<double> animation_sigmas(double sigma_from, double sigma_to, int frames) {
    if (frames < 1) throw ParameterError("frames", "must be >= 1");
    if (!(sigma_from > 0.0 && sigma_from <= 1.0)) throw ParameterError("sigma_from", "must be in (0, 1]");
    if (!(sigma_to > 0.0 && sigma_to <= sigma_from)) throw ParameterError("sigma_to", "must be in (0, sigma_from]");
    if (frames > 1 && sigma_to == sigma_from) {
        throw ParameterError("sigma_to", "must differ from sigma_from when frames > 1");
    }
    std::vector<double> sigmas;
    sigmas.reserve(static_cast<std::size_t>(frames));
    for (int k = 0; k < frames; ++k) {
        if (k == 0) {
            sigmas.push_back(sigma_from);
        } else if (k == frames - 1) {
            sigmas.push_back(sigma_to);
        } else {
            const double t = static_cast<double>(k) / (frames - 1);
            sigmas.push_back(sigma_from + (sigma_to - sigma_from) * t);
        }
    }
    return sigmas;
}

AnimationSequence animate(const FabricSpec& spec, double sigma_from, double sigma_to, int frames,
                          const std::string& version) {
    AnimationSequence sequence;
    sequence.sigma_values = animation_sigmas(sigma_from, sigma_to, frames);
    sequence.frames.reserve(sequence.sigma_values.size());
    for (std::size_t k = 0; k < sequence.sigma_values.size(); ++k) {
        FabricSpec frame_spec = spec;
        frame_spec.relax.sigma = sequence.sigma_values[k];
        sequence.frames.push_back(generate_scene(frame_spec, {version, static_cast<int>(k)}));
    }
    return sequence;
}

}  // namespace spacerfab
