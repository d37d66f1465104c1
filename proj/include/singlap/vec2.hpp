#pragma once

#include <cmath>

namespace singlap {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double norm(Vec2 v) { return std::hypot(v.x, v.y); }

// Symmetric 2x2 matrix, e.g. a Hessian.
struct Sym2 {
  double xx = 0.0;
  double xy = 0.0;
  double yy = 0.0;

  double quad(Vec2 v) const { return xx * v.x * v.x + 2.0 * xy * v.x * v.y + yy * v.y * v.y; }
  double trace() const { return xx + yy; }
};

inline Vec2 polar_point(double r, double theta) { return {r * std::cos(theta), r * std::sin(theta)}; }

}  // namespace singlap
