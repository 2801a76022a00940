#ifndef SPACERFAB_OBJ_EXPORT_HPP
#define SPACERFAB_OBJ_EXPORT_HPP

#include <string>

#include "spacerfab/scene.hpp"

namespace spacerfab {

// ASCII Wavefront OBJ, one object per yarn swept into a tube. Only "o",
// "usemtl", "v" and "f" records follow the header comment; faces are
// triangles with 1-based global indices. Materials are named rgb_R_G_B.
std::string export_obj(const Scene& scene, int tube_segments);

}  // namespace spacerfab

#endif  // SPACERFAB_OBJ_EXPORT_HPP
