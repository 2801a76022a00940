#include "spacerfab/tube_mesh.hpp"

#include <cmath>
#include <numbers>

#include "spacerfab/errors.hpp"

namespace spacerfab {

namespace {

// Rotate v about unit axis k by angle with cos c and sin s (Rodrigues).
Point3 rotate(Point3 v, Point3 k, double c, double s) {
    return c * v + s * cross(k, v) + (1.0 - c) * dot(k, v) * k;
}

Point3 any_perpendicular(Point3 t) {
    // axis least aligned with t
    const double ax = std::abs(t.x), ay = std::abs(t.y), az = std::abs(t.z);
    Point3 axis{1.0, 0.0, 0.0};
    if (ay <= ax && ay <= az) {
        axis = {0.0, 1.0, 0.0};
    } else if (az <= ax && az <= ay) {
        axis = {0.0, 0.0, 1.0};
    }
    return normalized(cross(t, axis));
}

std::vector<Point3> vertex_tangents(std::span<const Point3> pts) {
    const std::size_t n = pts.size();
    std::vector<Point3> seg(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) seg[i] = normalized(pts[i + 1] - pts[i]);

    std::vector<Point3> tangents(n);
    tangents[0] = seg[0];
    tangents[n - 1] = seg[n - 2];
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const Point3 sum = seg[i - 1] + seg[i];
        // a path that doubles back (tuck apex) keeps the incoming direction
        tangents[i] = norm(sum) > 1e-9 ? normalized(sum) : seg[i - 1];
    }
    return tangents;
}

}  // namespace

TubeMesh sweep_tube(const Polyline3& path, double radius_mm, int segments) {
    if (!std::isfinite(radius_mm) || radius_mm <= 0.0) throw ParameterError("radius", "must be > 0");
    if (segments < 4) throw ParameterError("tube_segments", "must be >= 4");
    const auto pts = path.points();
    if (pts.size() < 2) throw GeometryError("tube path needs at least 2 points");

    const std::vector<Point3> tangents = vertex_tangents(pts);
    const auto ring = static_cast<std::size_t>(segments);

    TubeMesh mesh;
    mesh.vertices.reserve(pts.size() * ring);
    mesh.triangles.reserve(2 * (pts.size() - 1) * ring);

    Point3 normal = any_perpendicular(tangents[0]);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i > 0) {
            const Point3 t0 = tangents[i - 1];
            const Point3 t1 = tangents[i];
            const Point3 axis = cross(t0, t1);
            const double s = norm(axis);
            const double c = dot(t0, t1);
            // antiparallel tangents: a half turn about the current normal
            // leaves it where it is
            if (s > 1e-12) normal = rotate(normal, (1.0 / s) * axis, c, s);
            const Point3 projected = normal - dot(normal, t1) * t1;
            normal = norm(projected) > 1e-9 ? normalized(projected) : any_perpendicular(t1);
        }
        const Point3 binormal = cross(tangents[i], normal);
        for (std::size_t k = 0; k < ring; ++k) {
            const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(ring);
            mesh.vertices.push_back(pts[i] + radius_mm * (std::cos(angle) * normal + std::sin(angle) * binormal));
        }
    }

    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const auto base = static_cast<std::uint32_t>(i * ring);
        const auto next = static_cast<std::uint32_t>((i + 1) * ring);
        for (std::size_t k = 0; k < ring; ++k) {
            const auto a = static_cast<std::uint32_t>(k);
            const auto b = static_cast<std::uint32_t>((k + 1) % ring);
            mesh.triangles.push_back({base + a, base + b, next + b});
            mesh.triangles.push_back({base + a, next + b, next + a});
        }
    }
    return mesh;
}

}  // namespace spacerfab
