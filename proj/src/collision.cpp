#include "spacerfab/collision.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "spacerfab/errors.hpp"

namespace spacerfab {

std::vector<CollisionRecord> detect_collisions(std::span<const StrainedSpacer> spacers, double clearance_mm) {
    if (!std::isfinite(clearance_mm) || clearance_mm < 0.0) throw ParameterError("clearance", "must be >= 0");

    std::vector<CollisionRecord> records;
    for (std::size_t fa = 0; fa < spacers.size(); ++fa) {
        const auto pa = spacers[fa].yarn.path.points();
        for (std::size_t fb = fa + 1; fb < spacers.size(); ++fb) {
            const auto pb = spacers[fb].yarn.path.points();
            const double reach = spacers[fa].yarn.radius_mm + spacers[fb].yarn.radius_mm + clearance_mm;
            for (std::size_t i = 0; i + 1 < pa.size(); ++i) {
                for (std::size_t j = 0; j + 1 < pb.size(); ++j) {
                    const SegmentClosest c = segment_segment_distance(pa[i], pa[i + 1], pb[j], pb[j + 1]);
                    if (c.distance < reach) records.push_back({fa, fb, i, j, c.distance});
                }
            }
        }
    }
    std::sort(records.begin(), records.end(), [](const CollisionRecord& l, const CollisionRecord& r) {
        return std::tie(l.family_a, l.family_b, l.segment_a, l.segment_b) <
               std::tie(r.family_a, r.family_b, r.segment_a, r.segment_b);
    });
    return records;
}

}  // namespace spacerfab
