#include "pcav/skeleton.hpp"

namespace pcav {

const char* joint_name(JointId id) {
    switch (id) {
        case JointId::spine_base: return "spine_base";
        case JointId::spine_mid: return "spine_mid";
        case JointId::neck: return "neck";
        case JointId::head: return "head";
        case JointId::shoulder_left: return "shoulder_left";
        case JointId::elbow_left: return "elbow_left";
        case JointId::wrist_left: return "wrist_left";
        case JointId::hand_left: return "hand_left";
        case JointId::shoulder_right: return "shoulder_right";
        case JointId::elbow_right: return "elbow_right";
        case JointId::wrist_right: return "wrist_right";
        case JointId::hand_right: return "hand_right";
        case JointId::hip_left: return "hip_left";
        case JointId::knee_left: return "knee_left";
        case JointId::ankle_left: return "ankle_left";
        case JointId::foot_left: return "foot_left";
        case JointId::hip_right: return "hip_right";
        case JointId::knee_right: return "knee_right";
        case JointId::ankle_right: return "ankle_right";
        case JointId::foot_right: return "foot_right";
        case JointId::spine_shoulder: return "spine_shoulder";
        case JointId::hand_tip_left: return "hand_tip_left";
        case JointId::thumb_left: return "thumb_left";
        case JointId::hand_tip_right: return "hand_tip_right";
        case JointId::thumb_right: return "thumb_right";
    }
    return "unknown";
}

Skeleton::Skeleton() {
    for (std::size_t i = 0; i < kJointCount; ++i) joints[i].id = static_cast<JointId>(i);
}

const BoneGraph& BoneGraph::standard() {
    using J = JointId;
    static const BoneGraph graph{{
        {J::spine_base, J::spine_mid},
        {J::spine_mid, J::spine_shoulder},
        {J::spine_shoulder, J::neck},
        {J::neck, J::head},
        {J::spine_shoulder, J::shoulder_left},
        {J::shoulder_left, J::elbow_left},
        {J::elbow_left, J::wrist_left},
        {J::wrist_left, J::hand_left},
        {J::hand_left, J::hand_tip_left},
        {J::wrist_left, J::thumb_left},
        {J::spine_shoulder, J::shoulder_right},
        {J::shoulder_right, J::elbow_right},
        {J::elbow_right, J::wrist_right},
        {J::wrist_right, J::hand_right},
        {J::hand_right, J::hand_tip_right},
        {J::wrist_right, J::thumb_right},
        {J::spine_base, J::hip_left},
        {J::hip_left, J::knee_left},
        {J::knee_left, J::ankle_left},
        {J::ankle_left, J::foot_left},
        {J::spine_base, J::hip_right},
        {J::hip_right, J::knee_right},
        {J::knee_right, J::ankle_right},
        {J::ankle_right, J::foot_right},
    }};
    return graph;
}

Skeleton transform(const RigidPose& pose, const Skeleton& s) {
    Skeleton out = s;
    Quat rq = pose.rotation.to_quat();
    for (auto& j : out.joints) {
        j.position = transform(pose, j.position);
        j.orientation = rq * j.orientation;
    }
    return out;
}

Vec3 facing_direction(const Skeleton& s) {
    Vec3 f = s.joint(JointId::head).orientation.rotate({0, 0, 1});
    f.y = 0;
    if (f.squared_norm() < 1e-12) {
        // head points straight up/down: derive forward from the shoulder
        // line (forward = right x up for the body triad)
        Vec3 across = s.joint(JointId::shoulder_right).position -
                      s.joint(JointId::shoulder_left).position;
        f = across.cross(Vec3{0, 1, 0});
        f.y = 0;
        if (f.squared_norm() < 1e-12) return {0, 0, 1};
    }
    return f.normalized();
}

} // namespace pcav
