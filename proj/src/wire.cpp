#include "pcav/wire.hpp"

#include <bit>
#include <cstring>
#include <string>

#include "pcav/error.hpp"

namespace pcav {

namespace {

void put_u8(std::vector<uint8_t>& b, uint8_t v) { b.push_back(v); }

void put_u32(std::vector<uint8_t>& b, uint32_t v) {
    b.push_back(static_cast<uint8_t>(v));
    b.push_back(static_cast<uint8_t>(v >> 8));
    b.push_back(static_cast<uint8_t>(v >> 16));
    b.push_back(static_cast<uint8_t>(v >> 24));
}

void put_u64(std::vector<uint8_t>& b, uint64_t v) {
    for (int i = 0; i < 8; ++i) b.push_back(static_cast<uint8_t>(v >> (8 * i)));
}

void put_f32(std::vector<uint8_t>& b, float v) {
    put_u32(b, std::bit_cast<uint32_t>(v));
}

struct Reader {
    std::span<const uint8_t> buf;
    std::size_t pos = 0;

    std::size_t remaining() const { return buf.size() - pos; }

    uint8_t u8() { return buf[pos++]; }

    uint32_t u32() {
        uint32_t v = static_cast<uint32_t>(buf[pos]) | (static_cast<uint32_t>(buf[pos + 1]) << 8) |
                     (static_cast<uint32_t>(buf[pos + 2]) << 16) |
                     (static_cast<uint32_t>(buf[pos + 3]) << 24);
        pos += 4;
        return v;
    }

    uint64_t u64() {
        uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v |= static_cast<uint64_t>(buf[pos + i]) << (8 * i);
        pos += 8;
        return v;
    }

    float f32() { return std::bit_cast<float>(u32()); }
};

void check_finite(float v, const char* what) {
    if (!std::isfinite(v)) fail(Errc::invalid_field, std::string("non-finite ") + what);
}

} // namespace

std::size_t frame_size(std::size_t n_joints, std::size_t n_points) {
    return kHeaderSize + kJointRecordSize * n_joints + kPointRecordSize * n_points;
}

void encode_into(const QualityFrame& frame, std::vector<uint8_t>& out) {
    if (frame.points.size() >= (1ull << 32))
        fail(Errc::too_many_points, "point count does not fit u32");

    std::size_t joints = frame.skeleton ? kJointCount : 0;
    out.reserve(out.size() + frame_size(joints, frame.points.size()));

    out.insert(out.end(), kWireMagic, kWireMagic + 4);
    put_u8(out, kWireVersion);
    put_u8(out, frame.sensor_id);
    put_u8(out, static_cast<uint8_t>(joints));
    put_u8(out, 0); // flags, reserved
    put_u64(out, frame.timestamp_us);
    put_u32(out, static_cast<uint32_t>(frame.points.size()));

    if (frame.skeleton) {
        for (const Joint& j : frame.skeleton->joints) {
            put_u8(out, static_cast<uint8_t>(j.id));
            put_u8(out, static_cast<uint8_t>(j.state));
            put_f32(out, static_cast<float>(j.position.x));
            put_f32(out, static_cast<float>(j.position.y));
            put_f32(out, static_cast<float>(j.position.z));
            put_f32(out, static_cast<float>(j.orientation.w));
            put_f32(out, static_cast<float>(j.orientation.x));
            put_f32(out, static_cast<float>(j.orientation.y));
            put_f32(out, static_cast<float>(j.orientation.z));
        }
    }

    for (const QualityPoint& p : frame.points) {
        put_f32(out, static_cast<float>(p.position.x));
        put_f32(out, static_cast<float>(p.position.y));
        put_f32(out, static_cast<float>(p.position.z));
        put_u8(out, p.r);
        put_u8(out, p.g);
        put_u8(out, p.b);
        put_u8(out, p.quality == Quality::high ? 1 : 0);
    }
}

std::vector<uint8_t> encode(const QualityFrame& frame) {
    std::vector<uint8_t> out;
    encode_into(frame, out);
    return out;
}

QualityFrame decode(std::span<const uint8_t> bytes) {
    // magic first: a wrong stream should say so even when short
    if (bytes.empty()) fail(Errc::truncated, "empty buffer");
    std::size_t magic_avail = std::min<std::size_t>(bytes.size(), 4);
    if (std::memcmp(bytes.data(), kWireMagic, magic_avail) != 0)
        fail(Errc::bad_magic, "not a frame");
    if (bytes.size() < kHeaderSize)
        fail(Errc::truncated, "expected " + std::to_string(kHeaderSize) + " header bytes, got " +
                                  std::to_string(bytes.size()));

    Reader r{bytes, 4};
    uint8_t version = r.u8();
    if (version != kWireVersion)
        fail(Errc::version_mismatch, "found version " + std::to_string(version));

    QualityFrame frame;
    frame.sensor_id = r.u8();
    uint8_t joint_count = r.u8();
    uint8_t flags = r.u8();
    if (flags != 0) fail(Errc::invalid_field, "reserved flags must be zero");
    frame.timestamp_us = r.u64();
    uint32_t point_count = r.u32();

    if (joint_count != 0 && joint_count != kJointCount)
        fail(Errc::invalid_joint_count,
             "joint count must be 0 or 25, got " + std::to_string(joint_count));

    // validate the declared payload length before allocating anything
    std::size_t expected = frame_size(joint_count, point_count);
    if (bytes.size() < expected)
        fail(Errc::truncated, "expected " + std::to_string(expected) + " bytes, got " +
                                  std::to_string(bytes.size()));
    if (bytes.size() > expected)
        fail(Errc::trailing_bytes, std::to_string(bytes.size() - expected) +
                                       " bytes past the end of the frame");

    if (joint_count == kJointCount) {
        Skeleton s;
        s.timestamp_us = frame.timestamp_us;
        bool seen[kJointCount] = {};
        for (std::size_t i = 0; i < kJointCount; ++i) {
            uint8_t code = r.u8();
            if (code >= kJointCount)
                fail(Errc::invalid_joint_code, "joint code " + std::to_string(code));
            if (seen[code])
                fail(Errc::invalid_joint_code, "duplicate joint code " + std::to_string(code));
            seen[code] = true;
            uint8_t state = r.u8();
            if (state > 2) fail(Errc::invalid_field, "joint state " + std::to_string(state));

            Joint& j = s.joints[code];
            j.id = static_cast<JointId>(code);
            j.state = static_cast<TrackingState>(state);
            float px = r.f32(), py = r.f32(), pz = r.f32();
            check_finite(px, "joint position");
            check_finite(py, "joint position");
            check_finite(pz, "joint position");
            j.position = {px, py, pz};
            float qw = r.f32(), qx = r.f32(), qy = r.f32(), qz = r.f32();
            check_finite(qw, "joint orientation");
            check_finite(qx, "joint orientation");
            check_finite(qy, "joint orientation");
            check_finite(qz, "joint orientation");
            j.orientation = {qw, qx, qy, qz};
        }
        frame.skeleton = s;
    }

    frame.points.reserve(point_count);
    for (uint32_t i = 0; i < point_count; ++i) {
        QualityPoint p;
        float x = r.f32(), y = r.f32(), z = r.f32();
        check_finite(x, "point position");
        check_finite(y, "point position");
        check_finite(z, "point position");
        p.position = {x, y, z};
        p.r = r.u8();
        p.g = r.u8();
        p.b = r.u8();
        uint8_t q = r.u8();
        if (q > 1) fail(Errc::invalid_field, "quality bits 1-7 must be zero");
        p.quality = q ? Quality::high : Quality::low;
        frame.points.push_back(p);
    }

    return frame;
}

} // namespace pcav
