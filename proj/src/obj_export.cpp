#include "spacerfab/obj_export.hpp"

#include "spacerfab/scene_json.hpp"
#include "spacerfab/tube_mesh.hpp"

namespace spacerfab {

std::string export_obj(const Scene& scene, int tube_segments) {
    std::string out = "# spacerfab tube export (" + scene.meta.version + ")\n";
    std::size_t vertex_offset = 0;
    for (std::size_t i = 0; i < scene.yarns.size(); ++i) {
        const YarnPath& yarn = scene.yarns[i].yarn;
        const TubeMesh mesh = sweep_tube(yarn.path, yarn.radius_mm, tube_segments);

        out += "o yarn_" + std::to_string(i) + "_" + to_string(yarn.role) + "\n";
        out += "usemtl rgb_" + std::to_string(yarn.color.r) + "_" + std::to_string(yarn.color.g) + "_" +
               std::to_string(yarn.color.b) + "\n";
        for (const Point3& v : mesh.vertices) {
            out += "v " + format_real(v.x) + " " + format_real(v.y) + " " + format_real(v.z) + "\n";
        }
        for (const auto& tri : mesh.triangles) {
            out += "f " + std::to_string(vertex_offset + tri[0] + 1) + " " + std::to_string(vertex_offset + tri[1] + 1) +
                   " " + std::to_string(vertex_offset + tri[2] + 1) + "\n";
        }
        vertex_offset += mesh.vertices.size();
    }
    return out;
}

}  // namespace spacerfab
