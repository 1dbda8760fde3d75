#pragma once

#include <stdexcept>
#include <string>

namespace pcav {

enum class Errc {
    missing_joint,
    empty_path,
    no_relevant_joints,
    missing_skeleton,
    bad_magic,
    version_mismatch,
    truncated,
    trailing_bytes,
    invalid_joint_code,
    invalid_joint_count,
    invalid_field,
    too_many_points,
    multi_skeleton_unsupported,
    truncated_frame,
    degenerate,
    insufficient_overlap,
    unknown_sensor,
    io_failure,
    height_too_small,
    time_before_launch,
    unreachable,
    timeout,
    bad_config,
    invalid_argument,
};

const char* errc_name(Errc c);

/// Domain error carrying a stable code plus a human-readable message.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg);
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& msg);

} // namespace pcav
