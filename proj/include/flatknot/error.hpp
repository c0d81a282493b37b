#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace flatknot {

enum class ErrorCode {
    ZeroTurn,
    CollinearOverlap,
    InvalidCore,
    InvalidTruncation,
    NoPositiveWidth,
    UnboundedWidth,
    ModeMismatch,
    ParseError,
    ValidationError,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::ZeroTurn: return "ZeroTurn";
        case ErrorCode::CollinearOverlap: return "CollinearOverlap";
        case ErrorCode::InvalidCore: return "InvalidCore";
        case ErrorCode::InvalidTruncation: return "InvalidTruncation";
        case ErrorCode::NoPositiveWidth: return "NoPositiveWidth";
        case ErrorCode::UnboundedWidth: return "UnboundedWidth";
        case ErrorCode::ModeMismatch: return "ModeMismatch";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::ValidationError: return "ValidationError";
    }
    return "Unknown";
}

// Single exception type for the library; callers branch on code().
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace flatknot
