#include "spacerfab/geometry.hpp"

#include <algorithm>
#include <string>

#include "spacerfab/errors.hpp"

namespace spacerfab {

Point3 normalized(Point3 a) {
    const double n = norm(a);
    return n > 0.0 ? (1.0 / n) * a : Point3{};
}

Polyline3::Polyline3(std::vector<Point3> points) : points_(std::move(points)) {
    if (points_.size() < 2) {
        throw GeometryError("polyline needs at least 2 points, got " + std::to_string(points_.size()));
    }
    for (std::size_t i = 0; i < points_.size(); ++i) {
        const Point3& p = points_[i];
        if (!std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.z)) {
            throw GeometryError("polyline point " + std::to_string(i) + " is not finite");
        }
        if (i > 0 && distance(points_[i - 1], p) <= kMinPointSpacing) {
            throw GeometryError("polyline points " + std::to_string(i - 1) + " and " + std::to_string(i) +
                                " coincide");
        }
    }
}

double path_length(const Polyline3& path) {
    double total = 0.0;
    const auto pts = path.points();
    for (std::size_t i = 1; i < pts.size(); ++i) total += distance(pts[i - 1], pts[i]);
    return total;
}

SegmentClosest segment_segment_distance(Point3 p0, Point3 p1, Point3 q0, Point3 q1) {
    const Point3 d1 = p1 - p0;
    const Point3 d2 = q1 - q0;
    const Point3 r = p0 - q0;
    const double a = dot(d1, d1);
    const double e = dot(d2, d2);
    const double f = dot(d2, r);
    constexpr double eps = 1e-300;

    double s = 0.0;
    double t = 0.0;
    if (a <= eps && e <= eps) {
        // both degenerate
    } else if (a <= eps) {
        t = std::clamp(f / e, 0.0, 1.0);
    } else {
        const double c = dot(d1, r);
        if (e <= eps) {
            s = std::clamp(-c / a, 0.0, 1.0);
        } else {
            const double b = dot(d1, d2);
            const double denom = a * e - b * b;
            // parallel segments: any s works, pick the start
            s = denom > 1e-14 * a * e ? std::clamp((b * f - c * e) / denom, 0.0, 1.0) : 0.0;
            t = (b * s + f) / e;
            if (t < 0.0) {
                t = 0.0;
                s = std::clamp(-c / a, 0.0, 1.0);
            } else if (t > 1.0) {
                t = 1.0;
                s = std::clamp((b - c) / a, 0.0, 1.0);
            }
        }
    }
    const Point3 cp = p0 + s * d1;
    const Point3 cq = q0 + t * d2;
    return {distance(cp, cq), s, t};
}

}  // namespace spacerfab
