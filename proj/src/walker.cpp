#include "pcav/walker.hpp"

#include <algorithm>
#include <cmath>

#include "pcav/error.hpp"

namespace pcav {

namespace {

// Canonical standing pose, facing +Z. Lateral/vertical coordinates are
// fractions of total height; small forward offsets are absolute meters.
struct JointSpec {
    JointId id;
    double fx; // lateral, fraction of height (+ = body right)
    double fy; // vertical, fraction of height
    double z;  // forward, meters
};

constexpr JointSpec kPose[] = {
    {JointId::spine_base, 0.0, 0.530, 0.0},
    {JointId::spine_mid, 0.0, 0.660, 0.0},
    {JointId::neck, 0.0, 0.845, 0.0},
    {JointId::spine_shoulder, 0.0, 0.790, 0.0},
    {JointId::shoulder_left, -0.110, 0.800, 0.0},
    {JointId::elbow_left, -0.125, 0.625, 0.0},
    {JointId::wrist_left, -0.135, 0.470, 0.01},
    {JointId::hand_left, -0.140, 0.430, 0.02},
    {JointId::hand_tip_left, -0.145, 0.385, 0.03},
    {JointId::thumb_left, -0.125, 0.420, 0.035},
    {JointId::shoulder_right, 0.110, 0.800, 0.0},
    {JointId::elbow_right, 0.125, 0.625, 0.0},
    {JointId::wrist_right, 0.135, 0.470, 0.01},
    {JointId::hand_right, 0.140, 0.430, 0.02},
    {JointId::hand_tip_right, 0.145, 0.385, 0.03},
    {JointId::thumb_right, 0.125, 0.420, 0.035},
    {JointId::hip_left, -0.058, 0.505, 0.0},
    {JointId::knee_left, -0.060, 0.280, 0.005},
    {JointId::ankle_left, -0.062, 0.045, -0.01},
    {JointId::foot_left, -0.062, 0.025, 0.05},
    {JointId::hip_right, 0.058, 0.505, 0.0},
    {JointId::knee_right, 0.060, 0.280, 0.005},
    {JointId::ankle_right, 0.062, 0.045, -0.01},
    {JointId::foot_right, 0.062, 0.025, 0.05},
};

bool is_upper_body(JointId id) {
    switch (id) {
        case JointId::spine_base:
        case JointId::hip_left:
        case JointId::hip_right:
        case JointId::knee_left:
        case JointId::knee_right:
        case JointId::ankle_left:
        case JointId::ankle_right:
        case JointId::foot_left:
        case JointId::foot_right:
            return false;
        default:
            return true;
    }
}

bool is_left_leg(JointId id) {
    return id == JointId::knee_left || id == JointId::ankle_left || id == JointId::foot_left;
}
bool is_right_leg(JointId id) {
    return id == JointId::knee_right || id == JointId::ankle_right || id == JointId::foot_right;
}
bool is_left_arm(JointId id) {
    switch (id) {
        case JointId::elbow_left:
        case JointId::wrist_left:
        case JointId::hand_left:
        case JointId::hand_tip_left:
        case JointId::thumb_left:
            return true;
        default:
            return false;
    }
}
bool is_right_arm(JointId id) {
    switch (id) {
        case JointId::elbow_right:
        case JointId::wrist_right:
        case JointId::hand_right:
        case JointId::hand_tip_right:
        case JointId::thumb_right:
            return true;
        default:
            return false;
    }
}

// Smooth 0 -> 1 -> 0 bump over a [begin, end] window.
double window_weight(double x, double begin, double end) {
    if (end <= begin || x <= begin || x >= end) return 0.0;
    double u = (x - begin) / (end - begin);
    double sp = std::sin(M_PI * u);
    return sp * sp;
}

struct PathPoint {
    Vec3 position; // y = 0
    Vec3 tangent;  // horizontal unit
};

PathPoint point_at(const std::vector<Vec3>& path, double s) {
    Vec3 prev{path[0].x, 0, path[0].z};
    Vec3 tangent{0, 0, 1};
    for (std::size_t i = 1; i < path.size(); ++i) {
        Vec3 next{path[i].x, 0, path[i].z};
        double seg = distance(prev, next);
        if (seg > 0) {
            tangent = (next - prev) / seg;
            if (s <= seg) return {prev + tangent * s, tangent};
            s -= seg;
        }
        prev = next;
    }
    return {prev, tangent};
}

} // namespace

double path_length(const std::vector<Vec3>& path) {
    double total = 0;
    for (std::size_t i = 1; i < path.size(); ++i) {
        Vec3 a{path[i - 1].x, 0, path[i - 1].z};
        Vec3 b{path[i].x, 0, path[i].z};
        total += distance(a, b);
    }
    return total;
}

double walk_distance(const WalkScript& script, double t) {
    double limit = path_length(script.path);
    if (t <= 0) return 0.0;

    double s = 0.0;
    if (script.speed_profile.empty()) {
        s = script.speed * t;
    } else {
        double prev_t = 0.0;
        double prev_speed = script.speed_profile.front().t <= 0.0
                                ? script.speed_profile.front().speed
                                : 0.0;
        for (const SpeedKey& key : script.speed_profile) {
            if (key.t >= t) break;
            if (key.t > prev_t) {
                s += prev_speed * (key.t - prev_t);
                prev_t = key.t;
            }
            prev_speed = key.speed;
        }
        s += prev_speed * (t - prev_t);
    }
    return std::min(s, limit);
}

Skeleton walker_pose(const WalkScript& script, double t) {
    if (script.path.size() < 2) fail(Errc::empty_path, "path needs at least 2 vertices");

    const double h = script.height;
    double s = walk_distance(script, t);
    PathPoint at = point_at(script.path, s);

    double half = script.clamp_half_extent;
    Vec3 base{std::clamp(at.position.x, -half, half), 0.0,
              std::clamp(at.position.z, -half, half)};

    Vec3 facing = script.fixed_facing ? script.fixed_facing->normalized() : at.tangent;
    Quat yaw = Quat::yaw_facing(facing);

    // gait phase advances with distance, so standing means no swing
    double phase = 2.0 * M_PI * s / script.stride_length;
    double swing_z = 0.15 * script.gait_amplitude;
    double swing_arm = 0.10 * script.gait_amplitude;
    double lift_amp = 0.04 * script.gait_amplitude;

    double crouch = 0.0;
    for (const CrouchSpan& c : script.crouches)
        crouch = std::max(crouch, c.drop * window_weight(s, c.s_begin, c.s_end));
    double step_lift = 0.0;
    for (const StepSpan& st : script.steps)
        step_lift = std::max(step_lift, st.lift * window_weight(s, st.s_begin, st.s_end));

    Skeleton out;
    out.timestamp_us = static_cast<uint64_t>(std::llround(std::max(0.0, t) * 1e6));

    for (const JointSpec& spec : kPose) {
        Vec3 local{spec.fx * h, spec.fy * h, spec.z};

        if (is_left_leg(spec.id) || is_right_leg(spec.id)) {
            double side = is_left_leg(spec.id) ? 1.0 : -1.0;
            double leg_phase = std::sin(phase) * side;
            local.z += swing_z * leg_phase;
            if (spec.id != JointId::knee_left && spec.id != JointId::knee_right)
                local.y += lift_amp * std::max(0.0, leg_phase);
            double foot_factor =
                (spec.id == JointId::knee_left || spec.id == JointId::knee_right) ? 0.6 : 1.0;
            local.y += step_lift * foot_factor;
        } else if (is_left_arm(spec.id) || is_right_arm(spec.id)) {
            double side = is_left_arm(spec.id) ? -1.0 : 1.0;
            local.z += swing_arm * std::sin(phase) * side;
        }

        if (is_upper_body(spec.id))
            local.y -= crouch;
        else if (spec.id == JointId::spine_base || spec.id == JointId::hip_left ||
                 spec.id == JointId::hip_right)
            local.y -= 0.6 * crouch;

        Vec3 world = yaw.rotate(local) + base;
        Joint& j = out.joint(spec.id);
        j.position = world;
        j.orientation = yaw;
        j.state = TrackingState::tracked;
    }

    // head: center sits one crown offset below total height
    {
        Vec3 local{0.0, h - 0.10 - crouch, 0.0};
        Joint& j = out.joint(JointId::head);
        j.position = yaw.rotate(local) + base;
        j.orientation = yaw;
        j.state = TrackingState::tracked;
    }

    // reach overrides: pull the hand chain toward a世target point
    for (const ReachSpan& reach : script.reaches) {
        double w = window_weight(t, reach.t_begin, reach.t_end);
        if (w <= 0) continue;
        auto pull = [&](JointId id, double weight) {
            Joint& j = out.joint(id);
            j.position = j.position + (reach.target - j.position) * weight;
        };
        if (reach.right_hand) {
            pull(JointId::hand_right, w);
            pull(JointId::hand_tip_right, w);
            pull(JointId::thumb_right, 0.9 * w);
            pull(JointId::wrist_right, 0.85 * w);
            pull(JointId::elbow_right, 0.5 * w);
        } else {
            pull(JointId::hand_left, w);
            pull(JointId::hand_tip_left, w);
            pull(JointId::thumb_left, 0.9 * w);
            pull(JointId::wrist_left, 0.85 * w);
            pull(JointId::elbow_left, 0.5 * w);
        }
    }

    return out;
}

} // namespace pcav
