#pragma once

#include <cmath>

namespace pcav {

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    constexpr Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
    constexpr Vec3 operator-() const { return {-x, -y, -z}; }
    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
    Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
    constexpr bool operator==(const Vec3& o) const { return x == o.x && y == o.y && z == o.z; }

    constexpr double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    constexpr Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    constexpr double squared_norm() const { return dot(*this); }
    double norm() const { return std::sqrt(squared_norm()); }
    Vec3 normalized() const { double n = norm(); return {x / n, y / n, z / n}; }
    bool is_finite() const { return std::isfinite(x) && std::isfinite(y) && std::isfinite(z); }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }
inline double distance(const Vec3& a, const Vec3& b) { return (a - b).norm(); }

/// Shortest distance from point p to the segment [a, b].
double point_segment_distance(const Vec3& p, const Vec3& a, const Vec3& b);

struct Quat {
    double w = 1.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr bool operator==(const Quat& o) const {
        return w == o.w && x == o.x && y == o.y && z == o.z;
    }

    double norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }
    Quat normalized() const {
        double n = norm();
        return {w / n, x / n, y / n, z / n};
    }
    constexpr Quat conjugate() const { return {w, -x, -y, -z}; }
    bool is_unit(double tol = 1e-6) const { return std::abs(norm() - 1.0) <= tol; }
    bool is_finite() const {
        return std::isfinite(w) && std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
    }

    Quat operator*(const Quat& o) const {
        return {w * o.w - x * o.x - y * o.y - z * o.z,
                w * o.x + x * o.w + y * o.z - z * o.y,
                w * o.y - x * o.z + y * o.w + z * o.x,
                w * o.z + x * o.y - y * o.x + z * o.w};
    }

    /// Rotate a vector by this (unit) quaternion.
    Vec3 rotate(const Vec3& v) const;

    static Quat from_axis_angle(const Vec3& axis, double angle_rad);
    /// Yaw about +Y mapping the canonical forward (+Z) onto `facing` (horizontal).
    static Quat yaw_facing(const Vec3& facing);
};

/// Row-major 3x3 matrix.
struct Mat3 {
    double m[3][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};

    static constexpr Mat3 identity() { return {}; }

    Vec3 operator*(const Vec3& v) const {
        return {m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
                m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
                m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z};
    }
    Mat3 operator*(const Mat3& o) const;
    Mat3 transpose() const;
    double determinant() const;

    /// Max absolute entry of (MᵀM − I); 0 for exact orthonormality.
    double orthonormality_error() const;
    bool is_rotation(double tol = 1e-9) const;

    static Mat3 from_quat(const Quat& q);
    Quat to_quat() const;

    /// Columns are the images of the basis vectors.
    static Mat3 from_columns(const Vec3& c0, const Vec3& c1, const Vec3& c2);
};

/// Rigid transform: world = rotation * local + translation.
struct RigidPose {
    Mat3 rotation;
    Vec3 translation;

    static RigidPose identity() { return {}; }
    RigidPose inverse() const;
    /// Composition: (a ∘ b)(p) = a(b(p)).
    RigidPose compose(const RigidPose& b) const;
    bool is_valid(double tol = 1e-9) const;
};

Vec3 transform(const RigidPose& pose, const Vec3& p);

/// Pose whose local +Z axis points from `eye` toward `target` (optical-axis
/// convention); +Y stays as close to `up` as the geometry allows.
RigidPose look_at_pose(const Vec3& eye, const Vec3& target, const Vec3& up = {0, 1, 0});

} // namespace pcav
