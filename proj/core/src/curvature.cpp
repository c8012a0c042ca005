#include "alexandrov/curvature.hpp"

#include "alexandrov/error.hpp"
#include "alexandrov/geometry.hpp"

#include <algorithm>
#include <string>

namespace alexandrov {

int CurvatureReport::essential_count() const {
  return static_cast<int>(std::count_if(vertices.begin(), vertices.end(), [](const auto& v) { return v.essential; }));
}

std::vector<int> CurvatureReport::essential_vertices() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i].essential) out.push_back(static_cast<int>(i));
  }
  return out;
}

double CurvatureReport::total_deficit() const {
  double s = 0.0;
  for (const auto& v : vertices) s += v.deficit;
  return s;
}

std::vector<double> CurvatureReport::sorted_essential_deficits() const {
  std::vector<double> out;
  for (const auto& v : vertices) {
    if (v.essential) out.push_back(v.deficit);
  }
  std::sort(out.begin(), out.end());
  return out;
}

double angle_sum(const ConeMetric& metric, int vertex) {
  if (vertex < 0 || vertex >= metric.vertex_count()) {
    throw Error(ErrorCode::InvalidInput, "vertex index " + std::to_string(vertex) + " out of range");
  }
  double s = 0.0;
  for (int h : metric.triangulation().outgoing(vertex)) s += metric.corner_angle(h);
  return s;
}

CurvatureReport curvature_report(const ConeMetric& metric, const Tolerances& tol) {
  CurvatureReport r;
  r.vertices.resize(metric.vertex_count());
  for (int v = 0; v < metric.vertex_count(); ++v) {
    auto& vc = r.vertices[v];
    vc.angle_sum = angle_sum(metric, v);
    vc.deficit = kTwoPi - vc.angle_sum;
    vc.essential = vc.deficit > tol.angle;
  }
  return r;
}

PsiCheck is_in_psi(const ConeMetric& metric, const Tolerances& tol) {
  PsiCheck c;
  for (int v = 0; v < metric.vertex_count(); ++v) {
    const double theta = angle_sum(metric, v);
    if (theta > kTwoPi + tol.angle) {
      c.admissible = false;
      c.offender = v;
      c.offender_angle = theta;
      return c;
    }
  }
  return c;
}

}  // namespace alexandrov
