#ifndef SPACERFAB_SCENE_HPP
#define SPACERFAB_SCENE_HPP

#include <optional>
#include <string>
#include <vector>

#include "spacerfab/collision.hpp"
#include "spacerfab/fabric.hpp"
#include "spacerfab/yarn.hpp"

namespace spacerfab {

inline constexpr const char* kToolVersion = "spacerfab 1.0.0";

struct SceneMeta {
    std::string version = kToolVersion;
    FabricSpec spec;
    int frame = 0;
};

struct SceneComputed {
    std::vector<double> b_per_family;
    double b_actual = 0.0;
    // B_h^2 - B_v^2 between the first course-parallel and the first
    // wale-parallel family; 0 when the fabric lacks one of the two.
    double equilibrium_residual = 0.0;
    std::vector<double> inclination_angles;  // radians, per family
    std::vector<double> strains;             // per family
};

struct SceneYarn {
    YarnPath yarn;
    std::optional<double> strain;  // spacers only
};

struct Scene {
    SceneMeta meta;
    SceneComputed computed;
    std::vector<SceneYarn> yarns;  // lower panel courses, upper panel courses, spacers
    std::vector<CollisionRecord> collisions;
};

struct SceneOptions {
    std::string version = kToolVersion;
    int frame = 0;
};

// Lower panel at z = 0, upper panel at z = b_actual, every spacer family,
// computed metrics and spacer collisions at zero clearance.
Scene generate_scene(const FabricSpec& spec, const SceneOptions& options = {});

struct AnimationSequence {
    std::vector<Scene> frames;
    std::vector<double> sigma_values;
};

// Frames at sigma linearly spaced from sigma_from to sigma_to inclusive.
// Requires 0 < sigma_to <= sigma_from <= 1, frames >= 1, and distinct end
// points when frames > 1.
std::vector<double> animation_sigmas(double sigma_from, double sigma_to, int frames);
AnimationSequence animate(const FabricSpec& spec, double sigma_from, double sigma_to, int frames,
                          const std::string& version = kToolVersion);

}  // namespace spacerfab

#endif  // SPACERFAB_SCENE_HPP
