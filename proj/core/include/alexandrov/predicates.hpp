#pragma once

#include "alexandrov/geometry.hpp"

namespace alexandrov {

/// Sign of ((b - a) x (c - a)) . (d - a), evaluated exactly on the input
/// doubles: a floating-point filter first, rational arithmetic when the filter
/// cannot certify the sign. Positive when d lies on the side of the plane
/// (a, b, c) that its counter-clockwise normal points to.
int orient3d(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d);

/// Exact sign of (b - a) x (c - a) in the plane.
int orient2d(const Vec2& a, const Vec2& b, const Vec2& c);

/// Exact test for three collinear points in space.
bool collinear(const Vec3& a, const Vec3& b, const Vec3& c);

}  // namespace alexandrov
