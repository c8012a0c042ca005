#include "alexandrov/correspondence.hpp"
#include "alexandrov/curvature.hpp"
#include "alexandrov/error.hpp"
#include "alexandrov/surgery.hpp"

#include "cases.hpp"
#include "fixtures.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace alexandrov;

namespace {

constexpr double kPiD = std::numbers::pi;

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::InvalidInput;
}

}  // namespace

TEST(LensPatch, AnglesFromSides) {
  // Right isoceles lens over a unit base: sides 1/sqrt2, base angles pi/4.
  const LensPatch p{1.0, std::sqrt(0.5), std::sqrt(0.5)};
  EXPECT_NEAR(p.alpha(), kPiD / 4, 1e-12);
  EXPECT_NEAR(p.beta(), kPiD / 4, 1e-12);
  EXPECT_NEAR(p.gamma(), kPiD / 2, 1e-12);
  EXPECT_FALSE(p.degenerate());
}

TEST(LensPatch, FromAnglesInvertsAngles) {
  const LensPatch p = LensPatch::from_angles(2.0, 0.4, 1.1);
  EXPECT_NEAR(p.alpha(), 0.4, 1e-12);
  EXPECT_NEAR(p.beta(), 1.1, 1e-12);
  // Law of sines.
  EXPECT_NEAR(p.a / std::sin(1.1), 2.0 / std::sin(kPiD - 1.5), 1e-12);
}

TEST(LensPatch, EmptyPatch) {
  EXPECT_TRUE((LensPatch{1.0, 0.25, 0.75}).degenerate());
  EXPECT_TRUE(LensPatch::from_angles(1.0, 0.0, 0.0).degenerate());
}

TEST(CutAndPatch, DoubledSquareFlattenedCorner) {
  const ConeMetric sq = fixtures::doubled_square();
  const LensPatch lens = LensPatch::from_angles(1.0, kPiD / 2, kPiD / 6);
  const ConeMetric m = cut_and_patch(sq, 0, 1, lens);
  const auto rep = curvature_report(m);
  EXPECT_EQ(rep.essential_count(), 4);
  EXPECT_NEAR(rep.total_deficit(), 4 * kPiD, 1e-9);
  EXPECT_NEAR(rep.vertices[0].angle_sum, 2 * kPiD, 1e-9);
  EXPECT_NEAR(rep.vertices[1].angle_sum, kPiD + kPiD / 3, 1e-9);
  EXPECT_NEAR(rep.vertices.back().angle_sum, 2 * lens.gamma(), 1e-9);
  EXPECT_NEAR(m.total_area(), 2.0 + 2 * 0.5 * lens.a * lens.b * std::sin(lens.gamma()), 1e-9);
}

TEST(CutAndPatch, Errors) {
  const ConeMetric sq = fixtures::doubled_square();
  EXPECT_EQ(code_of([&] { (void)cut_and_patch(sq, 0, 1, LensPatch::from_angles(1.0, 0.75 * kPiD, 0.1)); }),
            ErrorCode::AdmissibilityViolated);
  EXPECT_EQ(code_of([&] { (void)cut_and_patch(sq, 0, 1, LensPatch{2.0, 1.5, 1.5}); }), ErrorCode::PatchBaseMismatch);
  const ConeMetric star = star_gluing(6);
  EXPECT_EQ(code_of([&] { (void)cut_and_patch(star, 0, 2, LensPatch{1.0, 0.6, 0.6}); }), ErrorCode::NotEssential);
}

TEST(CutAndPatch, DegeneratePatchIsIdentity) {
  const ConeMetric sq = fixtures::doubled_square();
  const ConeMetric m = cut_and_patch(sq, 0, 2, LensPatch{std::sqrt(2.0), 0.7, std::sqrt(2.0) - 0.7});
  EXPECT_LT(fingerprint_distance(fingerprint(sq), fingerprint(m)), 1e-12);
}

TEST(ExciseLens, UndoesDoubledSquarePatch) {
  const ConeMetric sq = fixtures::doubled_square();
  const ConeMetric m = cut_and_patch(sq, 0, 1, LensPatch::from_angles(1.0, kPiD / 2, kPiD / 6));
  const Excision ex = excise_lens(m, m.vertex_count() - 1, 0, 1);
  EXPECT_LT(fingerprint_distance(fingerprint(sq), fingerprint(ex.metric)), 1e-8);
  EXPECT_NEAR(ex.patch.alpha(), kPiD / 2, 1e-8);
  EXPECT_NEAR(ex.patch.beta(), kPiD / 6, 1e-8);
}

TEST(ExciseLens, NoLensAroundAPolyhedronCorner) {
  const ConeMetric cube = fixtures::cube();
  EXPECT_EQ(code_of([&] { (void)excise_lens(cube, 0, 1, 2); }), ErrorCode::NoLensFound);
}

TEST(SurgeryProperty, FlatteningPatchKeepsCountAndAdmissibility) {
  Rng rng(41);
  for (int i = 0; i < 15; ++i) {
    const auto c = cases::random_surgery_case(rng);
    const LensPatch lens = cases::flattening_patch(c, rng);
    const ConeMetric m = cut_and_patch(c.metric, c.v, c.w, lens);
    const auto before = curvature_report(c.metric), after = curvature_report(m);
    EXPECT_EQ(after.essential_count(), before.essential_count()) << "case " << i;
    EXPECT_FALSE(after.vertices[c.v].essential);
    EXPECT_TRUE(is_in_psi(m).admissible);
    EXPECT_NEAR(after.total_deficit(), 4 * kPiD, 1e-9);
  }
}

TEST(SurgeryProperty, ExciseUndoesPatch) {
  Rng rng(43);
  for (int i = 0; i < 15; ++i) {
    const auto c = cases::random_surgery_case(rng);
    const LensPatch lens = i % 2 ? cases::flattening_patch(c, rng) : cases::interior_patch(c, rng);
    const ConeMetric m = cut_and_patch(c.metric, c.v, c.w, lens);
    const Excision ex = excise_lens(m, m.vertex_count() - 1, c.v, c.w);
    EXPECT_LT(fingerprint_distance(fingerprint(c.metric), fingerprint(ex.metric)), 1e-8) << "case " << i;
  }
}

TEST(SurgeryProperty, DegeneratePatchIsIdentity) {
  Rng rng(47);
  for (int i = 0; i < 15; ++i) {
    const auto c = cases::random_surgery_case(rng);
    const double a = std::uniform_real_distribution<double>(0.1, 0.9)(rng) * c.base;
    const ConeMetric m = cut_and_patch(c.metric, c.v, c.w, LensPatch{c.base, a, c.base - a});
    EXPECT_LT(fingerprint_distance(fingerprint(c.metric), fingerprint(m)), 1e-8);
  }
}
