#include "pcav/geometry.hpp"

#include <algorithm>

namespace pcav {

double point_segment_distance(const Vec3& p, const Vec3& a, const Vec3& b) {
    Vec3 ab = b - a;
    double len2 = ab.squared_norm();
    if (len2 == 0.0) return distance(p, a);
    double t = std::clamp((p - a).dot(ab) / len2, 0.0, 1.0);
    return distance(p, a + ab * t);
}

Vec3 Quat::rotate(const Vec3& v) const {
    // q v q* with v as a pure quaternion
    Vec3 u{x, y, z};
    Vec3 t = u.cross(v) * 2.0;
    return v + t * w + u.cross(t);
}

Quat Quat::from_axis_angle(const Vec3& axis, double angle_rad) {
    Vec3 n = axis.normalized();
    double h = angle_rad * 0.5;
    double s = std::sin(h);
    return {std::cos(h), n.x * s, n.y * s, n.z * s};
}

Quat Quat::yaw_facing(const Vec3& facing) {
    double yaw = std::atan2(facing.x, facing.z);
    return from_axis_angle({0, 1, 0}, yaw);
}

Mat3 Mat3::operator*(const Mat3& o) const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double s = 0;
            for (int k = 0; k < 3; ++k) s += m[i][k] * o.m[k][j];
            r.m[i][j] = s;
        }
    return r;
}

Mat3 Mat3::transpose() const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r.m[i][j] = m[j][i];
    return r;
}

double Mat3::determinant() const {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

double Mat3::orthonormality_error() const {
    Mat3 g = transpose() * (*this);
    double err = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double target = (i == j) ? 1.0 : 0.0;
            err = std::max(err, std::abs(g.m[i][j] - target));
        }
    return err;
}

bool Mat3::is_rotation(double tol) const {
    return orthonormality_error() <= tol && std::abs(determinant() - 1.0) <= tol;
}

Mat3 Mat3::from_quat(const Quat& q) {
    double w = q.w, x = q.x, y = q.y, z = q.z;
    Mat3 r;
    r.m[0][0] = 1 - 2 * (y * y + z * z);
    r.m[0][1] = 2 * (x * y - w * z);
    r.m[0][2] = 2 * (x * z + w * y);
    r.m[1][0] = 2 * (x * y + w * z);
    r.m[1][1] = 1 - 2 * (x * x + z * z);
    r.m[1][2] = 2 * (y * z - w * x);
    r.m[2][0] = 2 * (x * z - w * y);
    r.m[2][1] = 2 * (y * z + w * x);
    r.m[2][2] = 1 - 2 * (x * x + y * y);
    return r;
}

Quat Mat3::to_quat() const {
    // Shepperd's method: pick the largest diagonal combination for stability.
    double t;
    Quat q;
    if (m[2][2] < 0) {
        if (m[0][0] > m[1][1]) {
            t = 1 + m[0][0] - m[1][1] - m[2][2];
            q = {m[2][1] - m[1][2], t, m[0][1] + m[1][0], m[2][0] + m[0][2]};
        } else {
            t = 1 - m[0][0] + m[1][1] - m[2][2];
            q = {m[0][2] - m[2][0], m[0][1] + m[1][0], t, m[1][2] + m[2][1]};
        }
    } else {
        if (m[0][0] < -m[1][1]) {
            t = 1 - m[0][0] - m[1][1] + m[2][2];
            q = {m[1][0] - m[0][1], m[2][0] + m[0][2], m[1][2] + m[2][1], t};
        } else {
            t = 1 + m[0][0] + m[1][1] + m[2][2];
            q = {t, m[2][1] - m[1][2], m[0][2] - m[2][0], m[1][0] - m[0][1]};
        }
    }
    double s = 0.5 / std::sqrt(t);
    return {q.w * s, q.x * s, q.y * s, q.z * s};
}

Mat3 Mat3::from_columns(const Vec3& c0, const Vec3& c1, const Vec3& c2) {
    Mat3 r;
    r.m[0][0] = c0.x; r.m[0][1] = c1.x; r.m[0][2] = c2.x;
    r.m[1][0] = c0.y; r.m[1][1] = c1.y; r.m[1][2] = c2.y;
    r.m[2][0] = c0.z; r.m[2][1] = c1.z; r.m[2][2] = c2.z;
    return r;
}

RigidPose RigidPose::inverse() const {
    Mat3 rt = rotation.transpose();
    return {rt, -(rt * translation)};
}

RigidPose RigidPose::compose(const RigidPose& b) const {
    return {rotation * b.rotation, rotation * b.translation + translation};
}

bool RigidPose::is_valid(double tol) const {
    return rotation.is_rotation(tol) && translation.is_finite();
}

Vec3 transform(const RigidPose& pose, const Vec3& p) {
    return pose.rotation * p + pose.translation;
}

RigidPose look_at_pose(const Vec3& eye, const Vec3& target, const Vec3& up) {
    Vec3 forward = (target - eye).normalized();
    Vec3 right = up.cross(forward);
    if (right.squared_norm() < 1e-18) {
        // forward parallel to up; fall back to an arbitrary horizontal right
        right = Vec3{1, 0, 0}.cross(forward);
        if (right.squared_norm() < 1e-18) right = {0, 0, 1};
    }
    right = right.normalized();
    Vec3 cam_up = forward.cross(right);
    return {Mat3::from_columns(right, cam_up, forward), eye};
}

} // namespace pcav
