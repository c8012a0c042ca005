#include "alexandrov/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <limits>
#include <sstream>

namespace alexandrov {

namespace {

constexpr double kCanvas = 600.0;
constexpr double kMargin = 20.0;

bool separated_along(const std::array<Vec2, 3>& a, const std::array<Vec2, 3>& b, const Vec2& axis, double eps) {
  double amin = std::numeric_limits<double>::infinity(), amax = -amin, bmin = amin, bmax = -amin;
  for (const auto& p : a) {
    amin = std::min(amin, p.dot(axis));
    amax = std::max(amax, p.dot(axis));
  }
  for (const auto& p : b) {
    bmin = std::min(bmin, p.dot(axis));
    bmax = std::max(bmax, p.dot(axis));
  }
  return amax <= bmin + eps || bmax <= amin + eps;
}

bool interiors_overlap(const std::array<Vec2, 3>& a, const std::array<Vec2, 3>& b, double eps) {
  for (const auto* t : {&a, &b}) {
    for (int k = 0; k < 3; ++k) {
      const Vec2 d = (*t)[(k + 1) % 3] - (*t)[k];
      if (d.norm() == 0.0) continue;
      if (separated_along(a, b, Vec2(-d.y(), d.x()).normalized(), eps)) return false;
    }
  }
  return true;
}

bool any_overlap(const std::vector<std::array<Vec2, 3>>& tris, double extent) {
  const double eps = 1e-9 * std::max(extent, 1e-300);
  for (std::size_t i = 0; i < tris.size(); ++i) {
    for (std::size_t j = i + 1; j < tris.size(); ++j) {
      if (interiors_overlap(tris[i], tris[j], eps)) return true;
    }
  }
  return false;
}

struct Frame {
  Vec2 lo, hi;
  double scale = 1.0;

  explicit Frame(const std::vector<std::array<Vec2, 3>>& tris) {
    lo = Vec2::Constant(std::numeric_limits<double>::infinity());
    hi = -lo;
    for (const auto& t : tris) {
      for (const auto& p : t) {
        lo = lo.cwiseMin(p);
        hi = hi.cwiseMax(p);
      }
    }
    const double extent = std::max((hi - lo).maxCoeff(), 1e-300);
    scale = kCanvas / extent;
  }

  [[nodiscard]] double extent() const { return (hi - lo).maxCoeff(); }
  [[nodiscard]] double width() const { return (hi.x() - lo.x()) * scale + 2 * kMargin; }
  [[nodiscard]] double height() const { return (hi.y() - lo.y()) * scale + 2 * kMargin; }
  [[nodiscard]] Vec2 map(const Vec2& p) const {
    return {(p.x() - lo.x()) * scale + kMargin, (hi.y() - p.y()) * scale + kMargin};
  }
};

std::string fmt(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

std::string point(const Vec2& p) { return fmt(p.x()) + "," + fmt(p.y()); }

void header(std::ostringstream& os, const Frame& fr, bool overlap) {
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(fr.width()) << "\" height=\"" << fmt(fr.height())
     << "\" viewBox=\"0 0 " << fmt(fr.width()) << " " << fmt(fr.height()) << "\" data-scale=\"" << fmt(fr.scale)
     << "\" data-overlap=\"" << (overlap ? "true" : "false") << "\">\n";
  os << "<!-- scale: " << fmt(fr.scale) << " drawing units per unit length";
  if (overlap) os << "; warning: the unfolding overlaps itself";
  os << " -->\n";
}

void triangle(std::ostringstream& os, const Frame& fr, const std::array<Vec2, 3>& t, int label) {
  os << "<polygon points=\"" << point(fr.map(t[0])) << " " << point(fr.map(t[1])) << " " << point(fr.map(t[2]))
     << "\" fill=\"#e8eef7\" stroke=\"none\"/>\n";
  const Vec2 c = fr.map((t[0] + t[1] + t[2]) / 3.0);
  os << "<text x=\"" << fmt(c.x()) << "\" y=\"" << fmt(c.y())
     << "\" font-size=\"10\" text-anchor=\"middle\" fill=\"#555\">" << label << "</text>\n";
}

void segment(std::ostringstream& os, const Frame& fr, const Vec2& a, const Vec2& b, bool dashed) {
  const Vec2 p = fr.map(a), q = fr.map(b);
  os << "<line x1=\"" << fmt(p.x()) << "\" y1=\"" << fmt(p.y()) << "\" x2=\"" << fmt(q.x()) << "\" y2=\"" << fmt(q.y())
     << "\" stroke=\"#223\" stroke-width=\"1\"" << (dashed ? " stroke-dasharray=\"4 3\"" : "") << "/>\n";
}

}  // namespace

NetLayout unfold_net(const ConeMetric& metric) {
  const Triangulation& tri = metric.triangulation();
  NetLayout net;
  net.triangles.resize(tri.face_count());
  net.parent_halfedge.assign(tri.face_count(), -1);
  std::vector<char> placed(tri.face_count(), 0);
  for (int root = 0; root < tri.face_count(); ++root) {
    if (placed[root]) continue;
    net.triangles[root] = layout_face(metric, 3 * root, Vec2::Zero(), Vec2(metric.length(3 * root), 0.0));
    placed[root] = 1;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      const int f = queue.front();
      queue.pop_front();
      for (int k = 0; k < 3; ++k) {
        const int h = 3 * f + k, t = tri.twin(h), g = Triangulation::face(t);
        if (placed[g]) continue;
        net.triangles[g] = layout_face(metric, t, net.triangles[f][(k + 1) % 3], net.triangles[f][k]);
        net.parent_halfedge[g] = t;
        placed[g] = 1;
        queue.push_back(g);
      }
    }
  }
  net.overlaps = any_overlap(net.triangles, Frame(net.triangles).extent());
  return net;
}

SvgDocument export_svg_net(const ConeMetric& metric) {
  const Triangulation& tri = metric.triangulation();
  const NetLayout net = unfold_net(metric);
  const Frame fr(net.triangles);
  std::ostringstream os;
  header(os, fr, net.overlaps);
  for (int f = 0; f < tri.face_count(); ++f) triangle(os, fr, net.triangles[f], f);
  for (int f = 0; f < tri.face_count(); ++f) {
    for (int k = 0; k < 3; ++k) {
      const int h = 3 * f + k, t = tri.twin(h);
      const bool fold = net.parent_halfedge[f] == h || net.parent_halfedge[Triangulation::face(t)] == t;
      // Fold edges are drawn once, from the parent side.
      if (fold && net.parent_halfedge[f] == h) continue;
      segment(os, fr, net.triangles[f][k], net.triangles[f][(k + 1) % 3], fold);
    }
  }
  os << "</svg>\n";
  return {os.str(), fr.scale, net.overlaps};
}

SvgDocument export_svg_path(const ConeMetric& metric, const GeodesicPath& path) {
  const GeodesicStrip strip = unfold_strip(metric, path);
  std::vector<std::array<Vec2, 3>> tris = strip.triangles;
  if (tris.empty()) {
    const Vec2 a = strip.polyline.empty() ? Vec2::Zero() : strip.polyline.front();
    const Vec2 b = strip.polyline.empty() ? Vec2(1.0, 0.0) : strip.polyline.back();
    tris.push_back({a, b, a});
  }
  const Frame fr(tris);
  const bool overlap = any_overlap(strip.triangles, fr.extent());
  std::ostringstream os;
  header(os, fr, overlap);
  for (std::size_t i = 0; i < strip.triangles.size(); ++i) {
    triangle(os, fr, strip.triangles[i], strip.faces[i]);
    for (int k = 0; k < 3; ++k) segment(os, fr, strip.triangles[i][k], strip.triangles[i][(k + 1) % 3], true);
  }
  if (!strip.polyline.empty()) {
    os << "<polyline points=\"";
    for (std::size_t i = 0; i < strip.polyline.size(); ++i) os << (i ? " " : "") << point(fr.map(strip.polyline[i]));
    os << "\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"2\"/>\n";
  }
  os << "</svg>\n";
  return {os.str(), fr.scale, overlap};
}

}  // namespace alexandrov
