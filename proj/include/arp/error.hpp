#pragma once

#include <stdexcept>
#include <string>

namespace arp {

/// Failure categories; the numeric values double as C API status codes.
enum class ErrorCode : int {
    InvalidArgument = 1,
    Parse = 2,
    GuardExceeded = 3,
    Precondition = 4,
    Io = 5,
    Internal = 6,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

inline Error invalid_argument(const std::string& what) { return {ErrorCode::InvalidArgument, what}; }
inline Error parse_error(const std::string& what) { return {ErrorCode::Parse, what}; }
inline Error precondition_error(const std::string& what) { return {ErrorCode::Precondition, what}; }

}  // namespace arp
