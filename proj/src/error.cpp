#include "fg/error.hpp"

namespace fg {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnpairedSide: return "UnpairedSide";
    case ErrorCode::WrongPunctureCount: return "WrongPunctureCount";
    case ErrorCode::NonNegativeEuler: return "NonNegativeEuler";
    case ErrorCode::SelfGluedEdge: return "SelfGluedEdge";
    case ErrorCode::InadmissibleWeights: return "InadmissibleWeights";
    case ErrorCode::DegenerateQuadruple: return "DegenerateQuadruple";
    case ErrorCode::NonpositiveHeight: return "NonpositiveHeight";
    case ErrorCode::NonGenericFraming: return "NonGenericFraming";
    case ErrorCode::NotCoaxial: return "NotCoaxial";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::DegenerateCoordinate: return "DegenerateCoordinate";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::DisconnectedCurve: return "DisconnectedCurve";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::NotFilling: return "NotFilling";
    case ErrorCode::ZeroBend: return "ZeroBend";
    case ErrorCode::CuspExit: return "CuspExit";
    case ErrorCode::TangledPath: return "TangledPath";
    case ErrorCode::ArcsIntersect: return "ArcsIntersect";
    case ErrorCode::SchemaViolation: return "SchemaViolation";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace fg
