#include "pcav/error.hpp"

namespace pcav {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::missing_joint: return "missing_joint";
        case Errc::empty_path: return "empty_path";
        case Errc::no_relevant_joints: return "no_relevant_joints";
        case Errc::missing_skeleton: return "missing_skeleton";
        case Errc::bad_magic: return "bad_magic";
        case Errc::version_mismatch: return "version_mismatch";
        case Errc::truncated: return "truncated";
        case Errc::trailing_bytes: return "trailing_bytes";
        case Errc::invalid_joint_code: return "invalid_joint_code";
        case Errc::invalid_joint_count: return "invalid_joint_count";
        case Errc::invalid_field: return "invalid_field";
        case Errc::too_many_points: return "too_many_points";
        case Errc::multi_skeleton_unsupported: return "multi_skeleton_unsupported";
        case Errc::truncated_frame: return "truncated_frame";
        case Errc::degenerate: return "degenerate";
        case Errc::insufficient_overlap: return "insufficient_overlap";
        case Errc::unknown_sensor: return "unknown_sensor";
        case Errc::io_failure: return "io_failure";
        case Errc::height_too_small: return "height_too_small";
        case Errc::time_before_launch: return "time_before_launch";
        case Errc::unreachable: return "unreachable";
        case Errc::timeout: return "timeout";
        case Errc::bad_config: return "bad_config";
        case Errc::invalid_argument: return "invalid_argument";
    }
    return "unknown";
}

Error::Error(Errc code, const std::string& msg)
    : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

} // namespace pcav
