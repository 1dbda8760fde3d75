#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pcav/decimate.hpp"
#include "pcav/skeleton.hpp"

namespace pcav {

/// One sensor frame as transmitted: quality-tagged points plus at most one
/// skeleton, in sensor-local coordinates.
struct QualityFrame {
    uint8_t sensor_id = 0;
    uint64_t timestamp_us = 0;
    std::optional<Skeleton> skeleton;
    std::vector<QualityPoint> points;

    bool operator==(const QualityFrame& o) const {
        return sensor_id == o.sensor_id && timestamp_us == o.timestamp_us &&
               skeleton == o.skeleton && points == o.points;
    }
};

// Binary layout, all little-endian (see docs/protocol.md):
//   header  (20) : magic "PCAV" | version u8=1 | sensor_id u8 | joint_count u8
//                  | flags u8=0 | timestamp_us u64 | point_count u32
//   joint   (30) : joint_code u8 | state u8 | position 3xf32 | orientation 4xf32 (w,x,y,z)
//   point   (16) : x,y,z f32 | r,g,b u8 | q u8 (bit 0 = quality, bits 1-7 zero)
inline constexpr uint8_t kWireVersion = 1;
inline constexpr std::size_t kHeaderSize = 20;
inline constexpr std::size_t kJointRecordSize = 30;
inline constexpr std::size_t kPointRecordSize = 16;
inline constexpr char kWireMagic[4] = {'P', 'C', 'A', 'V'};

/// Encoded byte length of a frame with the given record counts.
std::size_t frame_size(std::size_t n_joints, std::size_t n_points);

std::vector<uint8_t> encode(const QualityFrame& frame);

/// Appends the encoded frame to `out` (hot-path variant that reuses buffers).
void encode_into(const QualityFrame& frame, std::vector<uint8_t>& out);

/// Total on arbitrary input: either returns a frame equal to the encoded one
/// or throws Error with one of bad_magic, version_mismatch, truncated,
/// trailing_bytes, invalid_joint_code, invalid_joint_count, invalid_field.
/// Declared counts are validated against the buffer length before any
/// allocation takes place.
QualityFrame decode(std::span<const uint8_t> bytes);

} // namespace pcav
