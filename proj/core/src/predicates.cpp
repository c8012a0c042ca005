#include "alexandrov/predicates.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <limits>

namespace alexandrov {

namespace {

using Rational = boost::multiprecision::cpp_rational;

constexpr double kEps = std::numeric_limits<double>::epsilon();

int sign_of(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

int orient3d_exact(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d) {
  Rational m[3][3];
  const Vec3* rows[3] = {&b, &c, &d};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) m[i][j] = Rational((*rows[i])[j]) - Rational(a[j]);
  }
  const Rational det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                       m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                       m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  return sign_of(det);
}

}  // namespace

int orient3d(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d) {
  const Vec3 u = b - a, v = c - a, w = d - a;
  const double det = u.cross(v).dot(w);
  // Error bound in the style of Shewchuk's orient3d filter, with slack.
  const double perm = (std::abs(u.y() * v.z()) + std::abs(u.z() * v.y())) * std::abs(w.x()) +
                      (std::abs(u.z() * v.x()) + std::abs(u.x() * v.z())) * std::abs(w.y()) +
                      (std::abs(u.x() * v.y()) + std::abs(u.y() * v.x())) * std::abs(w.z());
  const double bound = 16.0 * kEps * perm;
  if (det > bound) return 1;
  if (det < -bound) return -1;
  return orient3d_exact(a, b, c, d);
}

int orient2d(const Vec2& a, const Vec2& b, const Vec2& c) {
  const double l = (b.x() - a.x()) * (c.y() - a.y());
  const double r = (b.y() - a.y()) * (c.x() - a.x());
  const double det = l - r;
  const double bound = 8.0 * kEps * (std::abs(l) + std::abs(r));
  if (det > bound) return 1;
  if (det < -bound) return -1;
  const Rational e = (Rational(b.x()) - Rational(a.x())) * (Rational(c.y()) - Rational(a.y())) -
                     (Rational(b.y()) - Rational(a.y())) * (Rational(c.x()) - Rational(a.x()));
  return sign_of(e);
}

bool collinear(const Vec3& a, const Vec3& b, const Vec3& c) {
  for (int drop = 0; drop < 3; ++drop) {
    const int i = (drop + 1) % 3, j = (drop + 2) % 3;
    if (orient2d(Vec2(a[i], a[j]), Vec2(b[i], b[j]), Vec2(c[i], c[j])) != 0) return false;
  }
  return true;
}

}  // namespace alexandrov
