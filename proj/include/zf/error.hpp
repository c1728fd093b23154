#pragma once

#include <stdexcept>
#include <string>

namespace zf {

enum class ErrorCode {
    EmptySupport,
    BadMass,
    DegenerateLaw,
    BadOrder,
    SupportBlowup,
    BadN,
    BadRho,
    BadParam,
    BadIndex,
    BadInput,
    BadRange,
    NotSorted,
    NotStandardized,
    MomentMismatch,
    UnresolvedSign,
    CoincidentNodes,
    IllConditioned,
    NumericalRankFailure,
    InfeasibleParameters,
    SandwichViolation,
    IOFailure,
};

const char* error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

// Carries the 1-based index of the first moment that differs.
class MomentMismatchError : public Error {
public:
    MomentMismatchError(int index, double a, double b);

    int index() const noexcept { return index_; }

private:
    int index_;
};

}  // namespace zf
