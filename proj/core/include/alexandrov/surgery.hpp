#pragma once

#include "alexandrov/cone_metric.hpp"
#include "alexandrov/geodesics.hpp"

namespace alexandrov {

/// The lens glued into a slit: two copies of the triangle with base `base`
/// (the slit from v to w) and lateral sides `a` (at v) and `b` (at w), joined
/// along the lateral sides. `a + b == base` is the empty patch.
struct LensPatch {
  double base = 0.0;
  double a = 0.0;
  double b = 0.0;

  /// Patch with the given base angles at v and w.
  static LensPatch from_angles(double base, double alpha, double beta);

  [[nodiscard]] double alpha() const;  // base angle at v
  [[nodiscard]] double beta() const;   // base angle at w
  [[nodiscard]] double gamma() const;  // apex angle, pi - alpha - beta
  [[nodiscard]] bool degenerate(double rel_tol = 1e-12) const;
};

struct SurgeryOptions {
  GeodesicOptions geodesic{};
  double base_tol = 1e-9;  // allowed |patch.base - geodesic length|
};

/// Cuts along the shortest geodesic from v to w and glues in the lens. The
/// apex of a nondegenerate lens is the last vertex of the result; v and w keep
/// their indices. Points where the slit crossed edges stay as flat vertices.
/// Throws NotEssential, PatchBaseMismatch, AdmissibilityViolated, InvalidInput.
ConeMetric cut_and_patch(const ConeMetric& metric, int v, int w, const LensPatch& patch,
                         const SurgeryOptions& opts = {});

struct Excision {
  ConeMetric metric;
  LensPatch patch;
  int v = -1;  // indices of v and w in `metric`
  int w = -1;
};

/// Inverse of cut_and_patch: finds the doubled triangle with apex p bounded by
/// shortest geodesics p->v and p->w, removes it and glues the slit shut.
/// Throws NoLensFound.
Excision excise_lens(const ConeMetric& metric, int p, int v, int w, const SurgeryOptions& opts = {});

}  // namespace alexandrov
