#pragma once

#include <cmath>

namespace croftonlab {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
inline Vec2 operator*(Vec2 a, double s) { return {s * a.x, s * a.y}; }
inline Vec2 operator/(Vec2 a, double s) { return {a.x / s, a.y / s}; }

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm2(Vec2 a) { return dot(a, a); }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline Vec2 normalized(Vec2 a) { double n = norm(a); return {a.x / n, a.y / n}; }

// counterclockwise quarter turn
inline Vec2 perp(Vec2 a) { return {-a.y, a.x}; }

inline Vec2 from_angle(double t) { return {std::cos(t), std::sin(t)}; }
inline double angle_of(Vec2 a) { return std::atan2(a.y, a.x); }

// wrap to (-pi, pi]
inline double wrap_pi(double t) {
    const double two_pi = 6.283185307179586476925286766559;
    t = std::fmod(t, two_pi);
    if (t <= -3.14159265358979323846) t += two_pi;
    if (t > 3.14159265358979323846) t -= two_pi;
    return t;
}

// wrap to [0, 2*pi)
inline double wrap_2pi(double t) {
    const double two_pi = 6.283185307179586476925286766559;
    t = std::fmod(t, two_pi);
    if (t < 0) t += two_pi;
    return t;
}

} // namespace croftonlab
