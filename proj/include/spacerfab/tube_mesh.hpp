#ifndef SPACERFAB_TUBE_MESH_HPP
#define SPACERFAB_TUBE_MESH_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "spacerfab/geometry.hpp"

namespace spacerfab {

struct TubeMesh {
    std::vector<Point3> vertices;
    std::vector<std::array<std::uint32_t, 3>> triangles;
};

// Circular tube of the given radius around `path`, one ring of `segments`
// vertices per path point, oriented by parallel-transport frames. Open ends.
// |vertices| = |points| * segments, |triangles| = 2 (|points| - 1) segments.
TubeMesh sweep_tube(const Polyline3& path, double radius_mm, int segments);

}  // namespace spacerfab

#endif  // SPACERFAB_TUBE_MESH_HPP
