#pragma once

#include <cmath>
#include <stdexcept>

namespace equi {

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Vec3() = default;
    Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
    Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }

    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    double norm() const { return std::sqrt(x * x + y * y + z * z); }
    Vec3 normalized() const {
        double n = norm();
        if (n == 0.0) throw std::domain_error("Vec3::normalized: zero vector");
        return *this / n;
    }
    bool finite() const {
        return std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
    }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

// Unit quaternions represent sensor-to-earth rotations (Hamilton convention).
// q and -q are identified; quat_normalize picks the canonical sign (w >= 0).
struct Quaternion {
    double w = 1.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Quaternion() = default;
    Quaternion(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}

    static Quaternion identity() { return {1.0, 0.0, 0.0, 0.0}; }

    double norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }
    Quaternion conjugate() const { return {w, -x, -y, -z}; }
    Quaternion operator-() const { return {-w, -x, -y, -z}; }
};

// Hamilton product; ||a*b|| = ||a||*||b||.
inline Quaternion quat_mul(const Quaternion& a, const Quaternion& b) {
    return {
        a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
        a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
        a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
        a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w,
    };
}

// Unit norm plus canonical sign: w >= 0, ties broken by the first nonzero
// component of (x, y, z) being >= 0.
inline Quaternion quat_normalize(const Quaternion& q) {
    double n = q.norm();
    if (n == 0.0 || !std::isfinite(n))
        throw std::domain_error("quat_normalize: zero or non-finite quaternion");
    Quaternion u{q.w / n, q.x / n, q.y / n, q.z / n};
    bool flip = u.w < 0.0;
    if (u.w == 0.0) {
        if (u.x != 0.0) flip = u.x < 0.0;
        else if (u.y != 0.0) flip = u.y < 0.0;
        else flip = u.z < 0.0;
    }
    return flip ? -u : u;
}

// Rotates v by unit q: q (0,v) q*. Norm-preserving.
inline Vec3 quat_rotate(const Quaternion& q, const Vec3& v) {
    if (std::abs(q.norm() - 1.0) > 1e-6)
        throw std::invalid_argument("quat_rotate: quaternion is not unit norm");
    Vec3 qv{q.x, q.y, q.z};
    Vec3 t = 2.0 * qv.cross(v);
    return v + q.w * t + qv.cross(t);
}

inline Quaternion quat_from_axis_angle(const Vec3& axis, double angle_rad) {
    Vec3 a = axis.normalized();
    double h = 0.5 * angle_rad;
    double s = std::sin(h);
    return {std::cos(h), a.x * s, a.y * s, a.z * s};
}

// Shortest-arc rotation carrying `from` onto `to` (no twist about the axis).
inline Quaternion quat_between(const Vec3& from, const Vec3& to) {
    Vec3 u = from.normalized();
    Vec3 v = to.normalized();
    double d = u.dot(v);
    if (d < -1.0 + 1e-12) {
        // Antiparallel: rotate pi about any axis orthogonal to u.
        Vec3 axis = std::abs(u.x) < 0.9 ? u.cross({1, 0, 0}) : u.cross({0, 1, 0});
        return quat_from_axis_angle(axis, M_PI);
    }
    Quaternion q{1.0 + d, u.y * v.z - u.z * v.y, u.z * v.x - u.x * v.z,
                 u.x * v.y - u.y * v.x};
    return quat_normalize(q);
}

// Angle in radians of the relative rotation between two unit quaternions.
inline double quat_angle_between(const Quaternion& a, const Quaternion& b) {
    double d = std::abs(a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z);
    if (d > 1.0) d = 1.0;
    return 2.0 * std::acos(d);
}

constexpr double kDegPerRad = 180.0 / M_PI;
constexpr double kRadPerDeg = M_PI / 180.0;

}  // namespace equi
