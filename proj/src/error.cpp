#include "zf/error.hpp"

#include <sstream>

namespace zf {

const char* error_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::EmptySupport: return "EmptySupport";
        case ErrorCode::BadMass: return "BadMass";
        case ErrorCode::DegenerateLaw: return "DegenerateLaw";
        case ErrorCode::BadOrder: return "BadOrder";
        case ErrorCode::SupportBlowup: return "SupportBlowup";
        case ErrorCode::BadN: return "BadN";
        case ErrorCode::BadRho: return "BadRho";
        case ErrorCode::BadParam: return "BadParam";
        case ErrorCode::BadIndex: return "BadIndex";
        case ErrorCode::BadInput: return "BadInput";
        case ErrorCode::BadRange: return "BadRange";
        case ErrorCode::NotSorted: return "NotSorted";
        case ErrorCode::NotStandardized: return "NotStandardized";
        case ErrorCode::MomentMismatch: return "MomentMismatch";
        case ErrorCode::UnresolvedSign: return "UnresolvedSign";
        case ErrorCode::CoincidentNodes: return "CoincidentNodes";
        case ErrorCode::IllConditioned: return "IllConditioned";
        case ErrorCode::NumericalRankFailure: return "NumericalRankFailure";
        case ErrorCode::InfeasibleParameters: return "InfeasibleParameters";
        case ErrorCode::SandwichViolation: return "SandwichViolation";
        case ErrorCode::IOFailure: return "IOFailure";
    }
    return "Unknown";
}

namespace {

std::string mismatch_message(int index, double a, double b) {
    std::ostringstream os;
    os.precision(17);
    os << "moment " << index << " differs (" << a << " vs " << b << ")";
    return os.str();
}

}  // namespace

MomentMismatchError::MomentMismatchError(int index, double a, double b)
    : Error(ErrorCode::MomentMismatch, mismatch_message(index, a, b)), index_(index) {}

}  // namespace zf
