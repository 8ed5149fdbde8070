#include "lieball/error.hpp"

namespace lieball {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotOrthonormal: return "NotOrthonormal";
    case ErrorCode::Pole: return "Pole";
    case ErrorCode::BranchPoint: return "BranchPoint";
    case ErrorCode::BranchCut: return "BranchCut";
    case ErrorCode::NotDifferentiable: return "NotDifferentiable";
    case ErrorCode::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::NotInterior: return "NotInterior";
    case ErrorCode::TargetNotInterior: return "TargetNotInterior";
    case ErrorCode::InvalidElement: return "InvalidElement";
    case ErrorCode::NotPolynomial: return "NotPolynomial";
    case ErrorCode::NormMismatch: return "NormMismatch";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::NotIsometry: return "NotIsometry";
    case ErrorCode::RecoveryFailed: return "RecoveryFailed";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::StructureViolation: return "StructureViolation";
    case ErrorCode::NotAnalyticAtOrigin: return "NotAnalyticAtOrigin";
    case ErrorCode::InexactConstant: return "InexactConstant";
    case ErrorCode::NotNormalForm: return "NotNormalForm";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace lieball
