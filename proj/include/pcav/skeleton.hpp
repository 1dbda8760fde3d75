#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "pcav/geometry.hpp"

namespace pcav {

/// Stable wire codes 0..24 for the 25-joint full-body set.
enum class JointId : uint8_t {
    spine_base = 0,
    spine_mid = 1,
    neck = 2,
    head = 3,
    shoulder_left = 4,
    elbow_left = 5,
    wrist_left = 6,
    hand_left = 7,
    shoulder_right = 8,
    elbow_right = 9,
    wrist_right = 10,
    hand_right = 11,
    hip_left = 12,
    knee_left = 13,
    ankle_left = 14,
    foot_left = 15,
    hip_right = 16,
    knee_right = 17,
    ankle_right = 18,
    foot_right = 19,
    spine_shoulder = 20,
    hand_tip_left = 21,
    thumb_left = 22,
    hand_tip_right = 23,
    thumb_right = 24,
};

inline constexpr std::size_t kJointCount = 25;

const char* joint_name(JointId id);

enum class TrackingState : uint8_t {
    not_tracked = 0,
    inferred = 1,
    tracked = 2,
};

struct Joint {
    JointId id = JointId::spine_base;
    Vec3 position;
    Quat orientation;
    TrackingState state = TrackingState::not_tracked;

    /// A joint whose position may be consumed.
    bool usable() const { return state != TrackingState::not_tracked; }

    bool operator==(const Joint& o) const {
        return id == o.id && position == o.position && orientation == o.orientation &&
               state == o.state;
    }
};

/// One tracked body: exactly one entry per JointId, in code order.
struct Skeleton {
    std::array<Joint, kJointCount> joints{};
    uint64_t timestamp_us = 0;

    Skeleton();

    Joint& joint(JointId id) { return joints[static_cast<std::size_t>(id)]; }
    const Joint& joint(JointId id) const { return joints[static_cast<std::size_t>(id)]; }

    bool operator==(const Skeleton& o) const {
        return timestamp_us == o.timestamp_us && joints == o.joints;
    }
};

struct Bone {
    JointId parent;
    JointId child;
    bool operator==(const Bone& o) const { return parent == o.parent && child == o.child; }
};

/// Spanning tree over the joint set, rooted at the spine base. 24 edges.
struct BoneGraph {
    std::vector<Bone> edges;

    static const BoneGraph& standard();
};

/// Skeleton mapped through a rigid pose (positions and orientations).
Skeleton transform(const RigidPose& pose, const Skeleton& s);

/// Horizontal unit vector the body faces, from the head orientation
/// (canonical forward = +Z); falls back to the shoulder line when the
/// head points straight up/down.
Vec3 facing_direction(const Skeleton& s);

} // namespace pcav
