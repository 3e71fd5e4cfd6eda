#include "ghsub/error.hpp"

namespace ghsub {

std::string_view to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::InvalidInterval: return "InvalidInterval";
    case ErrorCode::ZeroInDenominator: return "ZeroInDenominator";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidWeights: return "InvalidWeights";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::NonDegenerateRealNode: return "NonDegenerateRealNode";
    case ErrorCode::NoPiecewiseBranch: return "NoPiecewiseBranch";
    case ErrorCode::AmbiguousPiecewise: return "AmbiguousPiecewise";
    case ErrorCode::NonFiniteDerivative: return "NonFiniteDerivative";
    case ErrorCode::NonDifferentiable: return "NonDifferentiable";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::MaxNotAttained: return "MaxNotAttained";
    case ErrorCode::MalformedNormIvf: return "MalformedNormIvf";
    case ErrorCode::EmptySubdifferential: return "EmptySubdifferentialEncountered";
    case ErrorCode::CandidateNotSubgradient: return "CandidateNotSubgradient";
    case ErrorCode::NoSubgradientFound: return "NoSubgradientFound";
    case ErrorCode::NonConvexObjective: return "NonConvexObjective";
    case ErrorCode::TheoremViolation: return "TheoremViolation";
    case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code)
{
}

namespace {

std::string located(const std::string& message, std::size_t line, std::size_t column)
{
    std::string where = line > 0 ? "line " + std::to_string(line) + ", " : std::string{};
    return where + "column " + std::to_string(column) + ": " + message;
}

} // namespace

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : Error(ErrorCode::ParseError, located(message, line, column)), line_(line), column_(column)
{
}

} // namespace ghsub
