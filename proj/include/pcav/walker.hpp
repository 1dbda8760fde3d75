#pragma once

#include <optional>
#include <vector>

#include "pcav/skeleton.hpp"

namespace pcav {

/// Piecewise-constant speed: the entry at the largest t' <= t applies.
struct SpeedKey {
    double t;     // seconds
    double speed; // m/s
};

/// Lower the upper body while passing an arc-length window (duck under).
struct CrouchSpan {
    double s_begin, s_end; // meters along the path
    double drop;           // meters
};

/// Raise the legs while passing an arc-length window (step over).
struct StepSpan {
    double s_begin, s_end;
    double lift; // meters
};

/// Blend one hand (plus wrist/tip/thumb) toward a point over a time window;
/// the hand is exactly at `target` at the window midpoint.
struct ReachSpan {
    double t_begin, t_end; // seconds
    bool right_hand = true;
    Vec3 target;
};

/// Scripted locomotion: a ground-plane polyline walked at arc-length speed,
/// with a deterministic gait cycle and optional keyframe overrides.
struct WalkScript {
    std::vector<Vec3> path; // y is ignored; ground plane
    double speed = 1.0;     // m/s, used when speed_profile is empty
    double height = 1.75;   // total body height in meters

    std::vector<SpeedKey> speed_profile;
    std::vector<CrouchSpan> crouches;
    std::vector<StepSpan> steps;
    std::vector<ReachSpan> reaches;
    std::optional<Vec3> fixed_facing; // strafe mode: keep facing this way

    double stride_length = 0.7; // meters per gait cycle
    double gait_amplitude = 1.0;
    double clamp_half_extent = 2.0; // keep the spine inside [-h, h]^2
};

double path_length(const std::vector<Vec3>& path);

/// Distance walked along the path at time t (clamped to the path length).
double walk_distance(const WalkScript& script, double t);

/// Deterministic full-body pose at time t. Throws empty_path for paths with
/// fewer than two vertices.
Skeleton walker_pose(const WalkScript& script, double t);

} // namespace pcav
