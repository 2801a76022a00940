#ifndef SPACERFAB_COLLISION_HPP
#define SPACERFAB_COLLISION_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "spacerfab/yarn.hpp"

namespace spacerfab {

// Two spacer segments from different families closer than their combined
// radii plus clearance. family_a < family_b always.
struct CollisionRecord {
    std::size_t family_a = 0;
    std::size_t family_b = 0;
    std::size_t segment_a = 0;
    std::size_t segment_b = 0;
    double distance = 0.0;

    friend bool operator==(const CollisionRecord&, const CollisionRecord&) = default;
};

// All-pairs segment test between spacers of different families. Families are
// identified by position in `spacers`. Output sorted by
// (family_a, family_b, segment_a, segment_b), one record per segment pair.
std::vector<CollisionRecord> detect_collisions(std::span<const StrainedSpacer> spacers, double clearance_mm);

}  // namespace spacerfab

#endif  // SPACERFAB_COLLISION_HPP
