#pragma once

#include <cmath>

namespace pressing {

// 2-D pitch-plane vector. Units are meters for positions and m/s for
// velocities; the pitch origin is at center, x along the long axis.
struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend constexpr bool operator==(const Vec2&, const Vec2&) = default;
};

constexpr Vec2 vec_add(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
constexpr Vec2 vec_sub(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
constexpr Vec2 vec_scale(Vec2 a, double k) { return {a.x * k, a.y * k}; }
constexpr double vec_dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
constexpr double vec_cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }

inline double vec_norm(Vec2 a) { return std::hypot(a.x, a.y); }

constexpr Vec2 operator+(Vec2 a, Vec2 b) { return vec_add(a, b); }
constexpr Vec2 operator-(Vec2 a, Vec2 b) { return vec_sub(a, b); }
constexpr Vec2 operator*(Vec2 a, double k) { return vec_scale(a, k); }
constexpr Vec2 operator*(double k, Vec2 a) { return vec_scale(a, k); }

inline bool vec_finite(Vec2 a) { return std::isfinite(a.x) && std::isfinite(a.y); }

}  // namespace pressing
