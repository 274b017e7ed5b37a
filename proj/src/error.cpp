#include "loophom/error.hpp"

namespace loophom {

std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorCode::NegativeLieDimension: return "NegativeLieDimension";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NotUnimodular: return "NotUnimodular";
    case ErrorCode::InvalidBundle: return "InvalidBundle";
    case ErrorCode::NotPrimitive: return "NotPrimitive";
    case ErrorCode::WrongDimension: return "WrongDimension";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::UnsupportedCase: return "UnsupportedCase";
    case ErrorCode::UnsupportedNode: return "UnsupportedNode";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::CoverageViolation: return "CoverageViolation";
    case ErrorCode::TableOutOfRange: return "TableOutOfRange";
    case ErrorCode::UnsupportedDegree: return "UnsupportedDegree";
    case ErrorCode::NotQuadratic: return "NotQuadratic";
    case ErrorCode::KoszulInconsistency: return "KoszulInconsistency";
    case ErrorCode::DifferentialNotSquareZero: return "DifferentialNotSquareZero";
    }
    return "Unknown";
}

} // namespace loophom
