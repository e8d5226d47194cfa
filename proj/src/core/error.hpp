#pragma once

#include <stdexcept>
#include <string>

namespace dit {

// Failure categories surfaced across the library and mapped onto C API
// status codes one-to-one.
enum class ErrorCode {
    BadArgument,
    NotNormalized,
    NegativeMass,
    EmptySupport,
    BadParameter,
    TruncationOverflow,
    AlphaOutOfRange,
    AlphaTooClose,
    ZeroMean,
    InteriorZero,
    NonPositiveF,
    IncomparableSupports,
    DegenerateSupport,
    NotCLogConcave,
    SupportExceedsN,
    NotULC,
    InfiniteInformation,
    OutOfRange,
    LengthMismatch,
    BadQ,
    DirectionNotIncreasing,
    ParseError,
    IoError,
    Internal,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace dit
