#include "pcav/avatar.hpp"

#include "pcav/error.hpp"

namespace pcav {

double body_height(const Skeleton& s, double head_top_offset) {
    const Joint& head = s.joint(JointId::head);
    if (!head.usable()) fail(Errc::missing_joint, "head not tracked");

    const Joint& lf = s.joint(JointId::foot_left);
    const Joint& rf = s.joint(JointId::foot_right);
    const Joint* foot = nullptr;
    if (lf.usable() && rf.usable())
        foot = (lf.position.y <= rf.position.y) ? &lf : &rf;
    else if (lf.usable())
        foot = &lf;
    else if (rf.usable())
        foot = &rf;
    else
        fail(Errc::missing_joint, "both feet not tracked");

    return distance(head.position, foot->position) + head_top_offset;
}

std::vector<Primitive> abstract_avatar(const Skeleton& s, const BoneGraph& graph,
                                       double joint_radius, double bone_radius) {
    if (joint_radius <= 0.0) fail(Errc::invalid_argument, "joint_radius must be > 0");
    if (bone_radius <= 0.0) fail(Errc::invalid_argument, "bone_radius must be > 0");

    std::vector<Primitive> out;
    for (const Joint& j : s.joints)
        if (j.usable()) out.push_back(Sphere{j.position, joint_radius});

    for (const Bone& b : graph.edges) {
        const Joint& p = s.joint(b.parent);
        const Joint& c = s.joint(b.child);
        if (p.usable() && c.usable())
            out.push_back(Cylinder{p.position, c.position, bone_radius});
    }
    return out;
}

RigidPose camera_pose(const Skeleton& s, Perspective perspective, const CameraOffsets& offsets) {
    const Joint& head = s.joint(JointId::head);
    if (!head.usable()) fail(Errc::missing_joint, "head not tracked");

    if (perspective == Perspective::first_person)
        return {Mat3::from_quat(head.orientation.normalized()), head.position};

    Vec3 facing = facing_direction(s);
    Vec3 eye = head.position + Vec3{0, 1, 0} * offsets.up - facing * offsets.back;
    if (distance(eye, head.position) < 1e-12)
        return {Mat3::from_quat(head.orientation.normalized()), head.position};
    return look_at_pose(eye, head.position);
}

} // namespace pcav
