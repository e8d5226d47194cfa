#include "core/error.hpp"

namespace dit {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::BadArgument: return "bad argument";
        case ErrorCode::NotNormalized: return "not normalized";
        case ErrorCode::NegativeMass: return "negative mass";
        case ErrorCode::EmptySupport: return "empty support";
        case ErrorCode::BadParameter: return "bad parameter";
        case ErrorCode::TruncationOverflow: return "truncation overflow";
        case ErrorCode::AlphaOutOfRange: return "alpha out of range";
        case ErrorCode::AlphaTooClose: return "alpha spacing too small";
        case ErrorCode::ZeroMean: return "zero mean";
        case ErrorCode::InteriorZero: return "zero probability inside support";
        case ErrorCode::NonPositiveF: return "test function not strictly positive";
        case ErrorCode::IncomparableSupports: return "incomparable supports";
        case ErrorCode::DegenerateSupport: return "degenerate support";
        case ErrorCode::NotCLogConcave: return "not c-log-concave";
        case ErrorCode::SupportExceedsN: return "support exceeds parameter n";
        case ErrorCode::NotULC: return "not ultra log-concave";
        case ErrorCode::InfiniteInformation: return "information functional is infinite";
        case ErrorCode::OutOfRange: return "out of range";
        case ErrorCode::LengthMismatch: return "length mismatch";
        case ErrorCode::BadQ: return "bad entropy order q";
        case ErrorCode::DirectionNotIncreasing: return "direction not coordinatewise increasing";
        case ErrorCode::ParseError: return "parse error";
        case ErrorCode::IoError: return "io error";
        case ErrorCode::Internal: return "internal error";
    }
    return "unknown error";
}

}  // namespace dit
