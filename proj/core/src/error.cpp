#include "alexandrov/error.hpp"

namespace alexandrov {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonManifold: return "NonManifold";
    case ErrorCode::NotSphere: return "NotSphere";
    case ErrorCode::TriangleInequalityViolation: return "TriangleInequalityViolation";
    case ErrorCode::MissingLength: return "MissingLength";
    case ErrorCode::DegenerateFace: return "DegenerateFace";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::NonConvexPolygon: return "NonConvexPolygon";
    case ErrorCode::DegeneratePolygon: return "DegeneratePolygon";
    case ErrorCode::MismatchedSegmentLengths: return "MismatchedSegmentLengths";
    case ErrorCode::NotSphereAfterGluing: return "NotSphereAfterGluing";
    case ErrorCode::CollinearInput: return "CollinearInput";
    case ErrorCode::TooFewPoints: return "TooFewPoints";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorCode::NumericallyAmbiguous: return "NumericallyAmbiguous";
    case ErrorCode::NotFlippable: return "NotFlippable";
    case ErrorCode::NotAdmissible: return "NotAdmissible";
    case ErrorCode::NotEssential: return "NotEssential";
    case ErrorCode::PatchBaseMismatch: return "PatchBaseMismatch";
    case ErrorCode::AdmissibilityViolated: return "AdmissibilityViolated";
    case ErrorCode::NoLensFound: return "NoLensFound";
    case ErrorCode::WrongVertexCount: return "WrongVertexCount";
    case ErrorCode::FlipSearchExhausted: return "FlipSearchExhausted";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::NonSimplicial: return "NonSimplicial";
  }
  return "Unknown";
}

bool is_validation_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::SearchBudgetExceeded:
    case ErrorCode::NumericallyAmbiguous:
    case ErrorCode::FlipSearchExhausted:
    case ErrorCode::VerificationFailed:
    case ErrorCode::NoLensFound:
    case ErrorCode::NonSimplicial:
      return false;
    default:
      return true;
  }
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace alexandrov
