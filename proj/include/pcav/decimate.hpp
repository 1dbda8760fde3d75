#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pcav/sensor_types.hpp"
#include "pcav/skeleton.hpp"

namespace pcav {

enum class Quality : uint8_t {
    low = 0,
    high = 1,
};

/// Wire-level point unit: position, color and a one-bit quality flag.
struct QualityPoint {
    Vec3 position;
    uint8_t r = 0, g = 0, b = 0;
    Quality quality = Quality::low;

    bool operator==(const QualityPoint& o) const {
        return position == o.position && r == o.r && g == o.g && b == o.b &&
               quality == o.quality;
    }
};

struct DecimationParams {
    /// Joints whose neighborhood is transmitted at full density. Hands carry
    /// the interaction; the head is deliberately not in the set.
    std::vector<JointId> relevant_joints{
        JointId::wrist_left,    JointId::hand_left,  JointId::hand_tip_left,
        JointId::wrist_right,   JointId::hand_right, JointId::hand_tip_right,
    };
    double threshold = 0.26;  // meters; see for_body()
    int low_stride = 4;       // keep every k-th low-quality point

    /// Threshold scaled to the subject: fraction of measured body height.
    static DecimationParams for_body(const Skeleton& s, double fraction = 0.15,
                                     int stride = 4);

    void validate() const;
};

/// Keeps exactly the points within `margin` of some usable bone segment.
/// Input order preserved. Throws missing_skeleton when no bone is usable.
std::vector<ColorPoint> segment_user(std::span<const ColorPoint> points, const Skeleton& s,
                                     double margin = 0.25);

/// High iff the distance to the nearest usable relevant joint is strictly
/// below the threshold. Throws no_relevant_joints when none is usable.
Quality classify(const Vec3& p, const Skeleton& s, const DecimationParams& params);

/// High points are always retained; low points are kept at stride k in input
/// order (indices 0, k, 2k, ...). Order preserved.
std::vector<QualityPoint> decimate(std::span<const ColorPoint> points, const Skeleton& s,
                                   const DecimationParams& params);

} // namespace pcav
