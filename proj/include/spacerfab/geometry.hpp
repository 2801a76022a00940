#ifndef SPACERFAB_GEOMETRY_HPP
#define SPACERFAB_GEOMETRY_HPP

#include <cmath>
#include <span>
#include <vector>

namespace spacerfab {

// x runs along a course (wale direction), y along a wale (course direction),
// z through the fabric thickness. Millimetres.
struct Point3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    friend Point3 operator+(Point3 a, Point3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend Point3 operator-(Point3 a, Point3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    friend Point3 operator*(double k, Point3 a) { return {k * a.x, k * a.y, k * a.z}; }
    friend Point3 operator*(Point3 a, double k) { return k * a; }
    friend bool operator==(const Point3&, const Point3&) = default;
};

inline double dot(Point3 a, Point3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Point3 cross(Point3 a, Point3 b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(Point3 a) { return std::sqrt(dot(a, a)); }
inline double distance(Point3 a, Point3 b) { return norm(a - b); }
Point3 normalized(Point3 a);

inline constexpr double kMinPointSpacing = 1e-9;

// Ordered point list with at least two points, no two consecutive points
// closer than kMinPointSpacing, all coordinates finite.
class Polyline3 {
public:
    Polyline3() = default;
    // Throws GeometryError if the invariant does not hold.
    explicit Polyline3(std::vector<Point3> points);

    std::span<const Point3> points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    const Point3& operator[](std::size_t i) const { return points_[i]; }
    std::size_t segment_count() const { return points_.empty() ? 0 : points_.size() - 1; }

private:
    std::vector<Point3> points_;
};

double path_length(const Polyline3& path);

struct SegmentClosest {
    double distance = 0.0;
    double s = 0.0;  // parameter on the first segment, [0, 1]
    double t = 0.0;  // parameter on the second segment, [0, 1]
};

// Minimum distance between segments [p0, p1] and [q0, q1] by clamped
// closest-point parameters. Handles degenerate and parallel segments.
SegmentClosest segment_segment_distance(Point3 p0, Point3 p1, Point3 q0, Point3 q1);

}  // namespace spacerfab

#endif  // SPACERFAB_GEOMETRY_HPP
