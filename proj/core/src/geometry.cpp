#include "alexandrov/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace alexandrov {

double corner_angle(double a, double b, double c) {
  const double denom = 2.0 * b * c;
  if (denom <= 0.0) return 0.0;
  const double cosine = (b * b + c * c - a * a) / denom;
  return std::acos(std::clamp(cosine, -1.0, 1.0));
}

double triangle_area(double a, double b, double c) {
  std::array<double, 3> s{a, b, c};
  std::sort(s.begin(), s.end(), std::greater<>());
  const double x = s[0], y = s[1], z = s[2];
  const double p = (x + (y + z)) * (z - (x - y)) * (z + (x - y)) * (x + (y - z));
  return p > 0.0 ? 0.25 * std::sqrt(p) : 0.0;
}

Vec2 place_apex(const Vec2& p, const Vec2& q, double dp, double dq) {
  const Vec2 base = q - p;
  const double len = base.norm();
  const Vec2 u = base / len;
  const Vec2 n(-u.y(), u.x());
  const double along = (len * len + dp * dp - dq * dq) / (2.0 * len);
  const double h2 = dp * dp - along * along;
  const double h = h2 > 0.0 ? std::sqrt(h2) : 0.0;
  return p + along * u + h * n;
}

double ccw_angle(const Vec2& from, const Vec2& to) {
  const double a = std::atan2(cross(from, to), from.dot(to));
  return a < 0.0 ? a + kTwoPi : a;
}

double wrap_angle(double angle, double period) {
  double r = std::fmod(angle, period);
  if (r < 0.0) r += period;
  if (r >= period) r -= period;
  return r;
}

}  // namespace alexandrov
