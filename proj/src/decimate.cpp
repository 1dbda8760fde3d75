#include "pcav/decimate.hpp"

#include <limits>

#include "pcav/avatar.hpp"
#include "pcav/error.hpp"

namespace pcav {

namespace {

std::vector<Vec3> usable_relevant_positions(const Skeleton& s, const DecimationParams& params) {
    std::vector<Vec3> out;
    for (JointId id : params.relevant_joints) {
        const Joint& j = s.joint(id);
        if (j.usable()) out.push_back(j.position);
    }
    if (out.empty()) fail(Errc::no_relevant_joints, "no relevant joint tracked");
    return out;
}

Quality classify_against(const Vec3& p, const std::vector<Vec3>& joints, double threshold) {
    double best = std::numeric_limits<double>::infinity();
    for (const Vec3& j : joints) {
        double d = distance(p, j);
        if (d < best) best = d;
    }
    return best < threshold ? Quality::high : Quality::low;
}

} // namespace

DecimationParams DecimationParams::for_body(const Skeleton& s, double fraction, int stride) {
    DecimationParams p;
    p.threshold = fraction * body_height(s);
    p.low_stride = stride;
    return p;
}

void DecimationParams::validate() const {
    if (threshold <= 0.0) fail(Errc::invalid_argument, "threshold must be > 0");
    if (low_stride < 1) fail(Errc::invalid_argument, "low_stride must be >= 1");
    if (relevant_joints.empty()) fail(Errc::invalid_argument, "relevant_joints must be non-empty");
}

std::vector<ColorPoint> segment_user(std::span<const ColorPoint> points, const Skeleton& s,
                                     double margin) {
    if (margin <= 0.0) fail(Errc::invalid_argument, "margin must be > 0");

    struct Segment { Vec3 a, b; };
    std::vector<Segment> bones;
    for (const Bone& bone : BoneGraph::standard().edges) {
        const Joint& p = s.joint(bone.parent);
        const Joint& c = s.joint(bone.child);
        if (p.usable() && c.usable()) bones.push_back({p.position, c.position});
    }
    if (bones.empty()) fail(Errc::missing_skeleton, "no usable bone segment");

    std::vector<ColorPoint> out;
    for (const ColorPoint& pt : points) {
        for (const Segment& seg : bones) {
            if (point_segment_distance(pt.position, seg.a, seg.b) <= margin) {
                out.push_back(pt);
                break;
            }
        }
    }
    return out;
}

Quality classify(const Vec3& p, const Skeleton& s, const DecimationParams& params) {
    return classify_against(p, usable_relevant_positions(s, params), params.threshold);
}

std::vector<QualityPoint> decimate(std::span<const ColorPoint> points, const Skeleton& s,
                                   const DecimationParams& params) {
    params.validate();
    const std::vector<Vec3> joints = usable_relevant_positions(s, params);

    std::vector<QualityPoint> out;
    out.reserve(points.size());
    std::size_t low_index = 0;
    for (const ColorPoint& pt : points) {
        if (classify_against(pt.position, joints, params.threshold) == Quality::high) {
            out.push_back({pt.position, pt.r, pt.g, pt.b, Quality::high});
        } else {
            if (low_index % static_cast<std::size_t>(params.low_stride) == 0)
                out.push_back({pt.position, pt.r, pt.g, pt.b, Quality::low});
            ++low_index;
        }
    }
    return out;
}

} // namespace pcav
