#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fg {

enum class ErrorCode {
  UnpairedSide,
  WrongPunctureCount,
  NonNegativeEuler,
  SelfGluedEdge,
  InadmissibleWeights,
  DegenerateQuadruple,
  NonpositiveHeight,
  NonGenericFraming,
  NotCoaxial,
  DegenerateInput,
  DegenerateCoordinate,
  BudgetExceeded,
  DisconnectedCurve,
  ZeroDenominator,
  NotFilling,
  ZeroBend,
  CuspExit,
  TangledPath,
  ArcsIntersect,
  SchemaViolation,
  InvalidArgument,
  Internal,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fg
