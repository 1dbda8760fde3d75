#pragma once

#include <cstdint>
#include <span>

#include "pcav/sensor_types.hpp"

namespace pcav {

/// Capsule-per-bone stand-in for a human body surface.
struct BodyModel {
    double torso_radius = 0.14; // meters
    double limb_radius = 0.05;
    double head_radius = 0.10;
    double density = 4000.0;    // surface points per m^2

    double bone_radius(const Bone& bone) const;
};

/// Points sampled uniformly by area on the capsule surface around each
/// usable bone. Deterministic for a fixed seed.
std::vector<ColorPoint> synth_body_cloud(const Skeleton& s, const BodyModel& model,
                                         uint64_t seed);

/// Culls world points to the sensor frustum and range shell and maps the
/// survivors to sensor-local coordinates. Skeletons are included only while
/// the spine base is within skeleton_range of the sensor origin.
SensorFrame sensor_capture(std::span<const ColorPoint> world_points,
                           std::span<const Skeleton> skeletons, const SensorConfig& cfg,
                           uint64_t timestamp_us);

} // namespace pcav
