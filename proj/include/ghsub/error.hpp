#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ghsub {

enum class ErrorCode {
    InvalidInterval,
    ZeroInDenominator,
    LengthMismatch,
    DimensionMismatch,
    InvalidWeights,
    InvalidArgument,
    OutOfDomain,
    ArityMismatch,
    NonDegenerateRealNode,
    NoPiecewiseBranch,
    AmbiguousPiecewise,
    NonFiniteDerivative,
    NonDifferentiable,
    NoConvergence,
    MaxNotAttained,
    MalformedNormIvf,
    EmptySubdifferential,
    CandidateNotSubgradient,
    NoSubgradientFound,
    NonConvexObjective,
    TheoremViolation,
    ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above so
// callers (CLI, bindings) can map it without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message);

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

// Text-format failure; line is 1-based (0 when the text is a single line).
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column);

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace ghsub
