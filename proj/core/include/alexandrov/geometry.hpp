#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <numbers>

namespace alexandrov {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

inline double cross(const Vec2& a, const Vec2& b) { return a.x() * b.y() - a.y() * b.x(); }

/// Interior angle between sides `b` and `c` of a triangle whose third side is
/// `a`. Law of cosines with the cosine clamped to [-1, 1].
double corner_angle(double a, double b, double c);

/// Triangle area from side lengths (Kahan's stable form of Heron's formula).
/// Returns 0 for violated triangle inequalities instead of NaN.
double triangle_area(double a, double b, double c);

/// Places the apex of a triangle with base p->q on the left of the base, at
/// distance `dp` from p and `dq` from q.
Vec2 place_apex(const Vec2& p, const Vec2& q, double dp, double dq);

/// Counter-clockwise angle from `from` to `to`, in [0, 2pi).
double ccw_angle(const Vec2& from, const Vec2& to);

/// Wraps an angle into [0, period).
double wrap_angle(double angle, double period);

}  // namespace alexandrov
