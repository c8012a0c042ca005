#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace alexandrov {

/// Typed failure categories. The CLI maps these onto exit codes:
/// validation failures exit with 1, numeric and budget failures with 2.
enum class ErrorCode {
  // surface_model
  NonManifold,
  NotSphere,
  TriangleInequalityViolation,
  MissingLength,
  DegenerateFace,
  InvalidInput,
  // builders
  NonConvexPolygon,
  DegeneratePolygon,
  MismatchedSegmentLengths,
  NotSphereAfterGluing,
  // forward map
  CollinearInput,
  TooFewPoints,
  DegenerateInput,
  // geodesics
  SearchBudgetExceeded,
  NumericallyAmbiguous,
  NotFlippable,
  NotAdmissible,
  // surgery
  NotEssential,
  PatchBaseMismatch,
  AdmissibilityViolated,
  NoLensFound,
  // correspondence
  WrongVertexCount,
  FlipSearchExhausted,
  VerificationFailed,
  // codecs
  NonSimplicial,
};

std::string_view to_string(ErrorCode code);

/// True for errors that reject the input (as opposed to numeric distress).
bool is_validation_error(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace alexandrov
