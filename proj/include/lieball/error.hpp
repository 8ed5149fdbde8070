#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lieball {

enum class ErrorCode {
  NotSymmetric,
  NoConvergence,
  DimensionMismatch,
  NotOrthonormal,
  Pole,
  BranchPoint,
  BranchCut,
  NotDifferentiable,
  ParameterOutOfRange,
  DomainMismatch,
  NotInterior,
  TargetNotInterior,
  InvalidElement,
  NotPolynomial,
  NormMismatch,
  NoSolution,
  NotNormalized,
  NotIsometry,
  RecoveryFailed,
  NotUnitary,
  StructureViolation,
  NotAnalyticAtOrigin,
  InexactConstant,
  NotNormalForm,
  ParseError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace lieball
