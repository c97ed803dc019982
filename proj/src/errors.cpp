#include "ctmp/errors.hpp"

namespace ctmp {

std::string_view error_code_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::kInvalidScenario: return "InvalidScenario";
        case ErrorCode::kHomeInvalid: return "HomeInvalid";
        case ErrorCode::kDegeneratePath: return "DegeneratePath";
        case ErrorCode::kInvalidPath: return "InvalidPath";
        case ErrorCode::kDescentStalled: return "DescentStalled";
        case ErrorCode::kBoundExceeded: return "BoundExceeded";
        case ErrorCode::kFingerprintMismatch: return "FingerprintMismatch";
        case ErrorCode::kCorruptLibrary: return "CorruptLibrary";
        case ErrorCode::kUnsupportedVersion: return "UnsupportedVersion";
        case ErrorCode::kGoalUncovered: return "GoalUncovered";
        case ErrorCode::kStartNotPotential: return "StartNotPotential";
        case ErrorCode::kStaleLibrary: return "StaleLibrary";
        case ErrorCode::kTimeout: return "Timeout";
        case ErrorCode::kNoPath: return "NoPath";
        case ErrorCode::kInvalidConfig: return "InvalidConfig";
        case ErrorCode::kIo: return "Io";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + detail), code_(code) {}

}  // namespace ctmp
