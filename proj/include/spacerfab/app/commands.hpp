#ifndef SPACERFAB_APP_COMMANDS_HPP
#define SPACERFAB_APP_COMMANDS_HPP

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "spacerfab/fabric.hpp"
#include "spacerfab/scene.hpp"
#include "spacerfab/spacer_math.hpp"

namespace spacerfab::app {

// A command could not produce its output (infeasible solve, unknown format).
class CommandError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Writes to a sibling temporary file and renames it over `path`, so a failed
// run never leaves a partial file behind.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

std::string scene_text(const FabricSpec& spec, const std::string& version = kToolVersion, int frame = 0);

void cmd_generate(const FabricSpec& spec, const std::filesystem::path& out, const std::string& version = kToolVersion);

// One "label = value" per line, fixed order.
std::string cmd_inspect(const FabricSpec& spec);

// Solves the float count of the direction `solve_for` against the first
// family of the other direction. When solving for n, the vertical shift is
// taken from the first wale-parallel family if any, else `fallback_shift`.
// Throws CommandError when the fabric lacks the needed family, the solved
// direction has no shrink, or no positive solution exists.
std::string cmd_equilibrium(const FabricSpec& spec, SolveFor solve_for, int fallback_shift = 0);

// Writes frame_0000.json ... into out_dir; returns the written paths.
std::vector<std::filesystem::path> cmd_animate(const FabricSpec& spec, double sigma_from, double sigma_to,
                                               int frames, const std::filesystem::path& out_dir,
                                               const std::string& version = kToolVersion);

std::string frame_file_name(int index);

// Reads a scene file and converts it. Only "obj" is supported; segments <= 0
// uses the scene's own tube_segments.
std::string export_text(const std::string& scene_json, const std::string& format, int tube_segments = 0);
void cmd_export(const std::filesystem::path& scene_path, const std::string& format,
                const std::filesystem::path& out, int tube_segments = 0);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace spacerfab::app

#endif  // SPACERFAB_APP_COMMANDS_HPP
