#include "pcav/sensor.hpp"

#include <cmath>
#include <random>

#include "pcav/error.hpp"

namespace pcav {

void SensorConfig::validate() const {
    if (!(min_range > 0.0 && min_range < skeleton_range && skeleton_range <= max_range))
        fail(Errc::bad_config, "require 0 < min_range < skeleton_range <= max_range");
    if (!(h_fov_deg > 0.0 && h_fov_deg < 180.0 && v_fov_deg > 0.0 && v_fov_deg < 180.0))
        fail(Errc::bad_config, "require 0 < fov < 180 deg");
    if (!pose.is_valid(1e-6)) fail(Errc::bad_config, "sensor pose is not rigid");
}

double BodyModel::bone_radius(const Bone& bone) const {
    using J = JointId;
    if (bone.child == J::head) return head_radius;
    switch (bone.child) {
        case J::spine_mid:
        case J::spine_shoulder:
        case J::neck:
        case J::shoulder_left:
        case J::shoulder_right:
        case J::hip_left:
        case J::hip_right:
            return torso_radius;
        default:
            return limb_radius;
    }
}

namespace {

// Deterministic per-bone color so segmented output is inspectable.
void bone_color(std::size_t bone_index, uint8_t& r, uint8_t& g, uint8_t& b) {
    r = static_cast<uint8_t>(90 + (bone_index * 53) % 140);
    g = static_cast<uint8_t>(70 + (bone_index * 29) % 120);
    b = static_cast<uint8_t>(110 + (bone_index * 17) % 100);
}

// Orthonormal frame with w as the third axis.
void frame_from_axis(const Vec3& w, Vec3& u, Vec3& v) {
    Vec3 any = std::abs(w.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
    u = any.cross(w).normalized();
    v = w.cross(u);
}

} // namespace

std::vector<ColorPoint> synth_body_cloud(const Skeleton& s, const BodyModel& model,
                                         uint64_t seed) {
    std::vector<ColorPoint> out;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    const auto& edges = BoneGraph::standard().edges;
    for (std::size_t bi = 0; bi < edges.size(); ++bi) {
        const Bone& bone = edges[bi];
        const Joint& pj = s.joint(bone.parent);
        const Joint& cj = s.joint(bone.child);
        if (!pj.usable() || !cj.usable()) continue;

        Vec3 a = pj.position, b = cj.position;
        double radius = model.bone_radius(bone);
        double len = distance(a, b);
        double side_area = 2.0 * M_PI * radius * len;
        double cap_area = 4.0 * M_PI * radius * radius; // two hemispheres
        double total = side_area + cap_area;
        auto count = static_cast<std::size_t>(std::floor(total * model.density));
        if (count == 0) continue;

        Vec3 axis = len > 0 ? (b - a) / len : Vec3{0, 1, 0};
        Vec3 u, v;
        frame_from_axis(axis, u, v);

        uint8_t cr, cg, cb;
        bone_color(bi, cr, cg, cb);

        for (std::size_t i = 0; i < count; ++i) {
            double pick = unit(rng) * total;
            double angle = 2.0 * M_PI * unit(rng);
            Vec3 p;
            if (pick < side_area) {
                double t = unit(rng);
                Vec3 radial = u * std::cos(angle) + v * std::sin(angle);
                p = a + axis * (t * len) + radial * radius;
            } else {
                // hemispherical cap beyond one endpoint
                bool top = pick - side_area >= cap_area * 0.5;
                double cz = unit(rng); // cos of polar angle, uniform on the hemisphere
                double sz = std::sqrt(std::max(0.0, 1.0 - cz * cz));
                Vec3 radial = u * (sz * std::cos(angle)) + v * (sz * std::sin(angle));
                p = top ? b + (radial + axis * cz) * radius
                        : a + (radial - axis * cz) * radius;
            }
            out.push_back({p, cr, cg, cb});
        }
    }
    return out;
}

SensorFrame sensor_capture(std::span<const ColorPoint> world_points,
                           std::span<const Skeleton> skeletons, const SensorConfig& cfg,
                           uint64_t timestamp_us) {
    cfg.validate();

    RigidPose world_to_sensor = cfg.pose.inverse();
    double tan_h = std::tan(cfg.h_fov_deg * 0.5 * M_PI / 180.0);
    double tan_v = std::tan(cfg.v_fov_deg * 0.5 * M_PI / 180.0);

    SensorFrame frame;
    frame.sensor_id = cfg.sensor_id;
    frame.timestamp_us = timestamp_us;

    for (const ColorPoint& wp : world_points) {
        Vec3 local = transform(world_to_sensor, wp.position);
        if (local.z <= 0.0) continue; // behind the sensor
        if (std::abs(local.x) > tan_h * local.z) continue;
        if (std::abs(local.y) > tan_v * local.z) continue;
        double range = local.norm();
        if (range < cfg.min_range || range > cfg.max_range) continue;
        frame.points.push_back({local, wp.r, wp.g, wp.b});
    }

    for (const Skeleton& sk : skeletons) {
        const Joint& spine = sk.joint(JointId::spine_base);
        if (!spine.usable()) continue;
        Vec3 local = transform(world_to_sensor, spine.position);
        if (local.norm() <= cfg.skeleton_range)
            frame.skeletons.push_back(transform(world_to_sensor, sk));
    }

    return frame;
}

} // namespace pcav
