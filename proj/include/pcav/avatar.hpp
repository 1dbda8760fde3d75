#pragma once

#include <variant>
#include <vector>

#include "pcav/skeleton.hpp"

namespace pcav {

struct Sphere {
    Vec3 center;
    double radius;
};

struct Cylinder {
    Vec3 a;
    Vec3 b;
    double radius;
};

using Primitive = std::variant<Sphere, Cylinder>;

/// Head-to-lowest-foot distance plus a crown offset (the tracked head joint
/// is a center point, not the top of the head).
/// Throws missing_joint if the head or both feet are not tracked.
double body_height(const Skeleton& s, double head_top_offset = 0.10);

/// One sphere per usable joint (code order) followed by one cylinder per
/// bone whose both endpoints are usable (edge order).
std::vector<Primitive> abstract_avatar(const Skeleton& s, const BoneGraph& graph,
                                       double joint_radius, double bone_radius);

enum class Perspective {
    first_person,
    third_person,
};

struct CameraOffsets {
    double up = 0.25;   // meters above the head (third person)
    double back = 1.0;  // meters behind the facing direction (third person)
};

/// First person: anchored at the head with the head orientation.
/// Third person: above and behind the head, looking at it.
RigidPose camera_pose(const Skeleton& s, Perspective perspective,
                      const CameraOffsets& offsets = {});

} // namespace pcav
