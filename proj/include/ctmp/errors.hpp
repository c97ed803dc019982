#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ctmp {

/// Failure categories surfaced across the library. The CLI prints the
/// code name verbatim, so names are part of the external interface.
enum class ErrorCode {
    kInvalidScenario,
    kHomeInvalid,
    kDegeneratePath,
    kInvalidPath,
    kDescentStalled,
    kBoundExceeded,
    kFingerprintMismatch,
    kCorruptLibrary,
    kUnsupportedVersion,
    kGoalUncovered,
    kStartNotPotential,
    kStaleLibrary,
    kTimeout,
    kNoPath,
    kInvalidConfig,
    kIo,
};

std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail);

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace ctmp
