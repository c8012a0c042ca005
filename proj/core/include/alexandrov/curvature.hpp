#pragma once

#include "alexandrov/cone_metric.hpp"

#include <optional>
#include <vector>

namespace alexandrov {

struct VertexCurvature {
  double angle_sum = 0.0;  // theta_v, radians
  double deficit = 0.0;    // 2*pi - theta_v
  bool essential = false;  // deficit > tol.angle
};

struct CurvatureReport {
  std::vector<VertexCurvature> vertices;

  [[nodiscard]] int essential_count() const;
  [[nodiscard]] std::vector<int> essential_vertices() const;
  [[nodiscard]] double total_deficit() const;
  /// Deficits of essential vertices, ascending.
  [[nodiscard]] std::vector<double> sorted_essential_deficits() const;
};

/// Sum of the corner angles around `vertex`.
double angle_sum(const ConeMetric& metric, int vertex);

CurvatureReport curvature_report(const ConeMetric& metric, const Tolerances& tol = {});

struct PsiCheck {
  bool admissible = true;
  std::optional<int> offender;  // first vertex with theta > 2*pi + tol.angle
  double offender_angle = 0.0;
};

/// Admissibility: every angle sum is at most 2*pi (up to tol.angle).
PsiCheck is_in_psi(const ConeMetric& metric, const Tolerances& tol = {});

}  // namespace alexandrov
