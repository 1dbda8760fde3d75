#pragma once

#include <cstdint>
#include <vector>

#include "pcav/geometry.hpp"
#include "pcav/skeleton.hpp"

namespace pcav {

/// Colored 3D sample; the frame it lives in (sensor-local vs world) is
/// carried by context, not by the type.
struct ColorPoint {
    Vec3 position;
    uint8_t r = 0, g = 0, b = 0;

    bool operator==(const ColorPoint& o) const {
        return position == o.position && r == o.r && g == o.g && b == o.b;
    }
};

struct SensorConfig {
    uint8_t sensor_id = 0;       // 0..254
    RigidPose pose;              // sensor -> world
    double h_fov_deg = 70.0;
    double v_fov_deg = 60.0;
    double min_range = 0.4;      // meters
    double max_range = 4.5;      // meters
    double skeleton_range = 2.5; // meters; tracking unreliable beyond this

    void validate() const;
};

/// One capture from one sensor, everything in sensor-local coordinates.
struct SensorFrame {
    uint8_t sensor_id = 0;
    uint64_t timestamp_us = 0;
    std::vector<ColorPoint> points;
    std::vector<Skeleton> skeletons;
};

} // namespace pcav
