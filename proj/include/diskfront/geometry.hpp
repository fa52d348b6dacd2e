#pragma once

#include <cmath>

namespace diskfront {

/// Plain 2D vector, double precision. Value type, no allocations.
struct Vec2 {
    double x{0.0};
    double y{0.0};

    constexpr Vec2() = default;
    constexpr Vec2(double x_, double y_) : x(x_), y(y_) {}

    constexpr Vec2 operator+(const Vec2& r) const { return {x + r.x, y + r.y}; }
    constexpr Vec2 operator-(const Vec2& r) const { return {x - r.x, y - r.y}; }
    constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
    constexpr Vec2 operator-() const { return {-x, -y}; }
    friend constexpr Vec2 operator*(double s, const Vec2& v) { return {v.x * s, v.y * s}; }

    Vec2& operator+=(const Vec2& r) { x += r.x; y += r.y; return *this; }
    Vec2& operator-=(const Vec2& r) { x -= r.x; y -= r.y; return *this; }

    constexpr double dot(const Vec2& r) const { return x * r.x + y * r.y; }

    /// z-component of the 2D cross product; equals the signed distance of the
    /// line through this point with direction r from the origin when ||r|| = 1.
    constexpr double cross(const Vec2& r) const { return x * r.y - y * r.x; }

    constexpr double norm2() const { return x * x + y * y; }
    double norm() const { return std::hypot(x, y); }

    Vec2 normalized(double eps = 1e-300) const {
        double n = norm();
        if (n <= eps) return {0.0, 0.0};
        return {x / n, y / n};
    }
};

/// Unit vector at polar angle s.
inline Vec2 unit_vector(double s) { return {std::cos(s), std::sin(s)}; }

/// Polar angle of v in (-pi, pi].
inline double polar_angle(const Vec2& v) { return std::atan2(v.y, v.x); }

}  // namespace diskfront
