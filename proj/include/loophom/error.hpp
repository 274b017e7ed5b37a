#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace loophom {

enum class ErrorCode {
    InvalidArgument,
    ZeroConstantTerm,
    NegativeLieDimension,
    NotSymmetric,
    NotUnimodular,
    InvalidBundle,
    NotPrimitive,
    WrongDimension,
    Unsupported,
    UnsupportedCase,
    UnsupportedNode,
    ParseError,
    CoverageViolation,
    TableOutOfRange,
    UnsupportedDegree,
    NotQuadratic,
    KoszulInconsistency,
    DifferentialNotSquareZero,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries a machine-readable code so the
/// CLI can map it to an exit status and a structured report entry.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code)
    {
    }

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message)
{
    throw Error(code, message);
}

} // namespace loophom
