#include "cnoise/error.hpp"

namespace cnoise {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::invalid_argument: return "invalid_argument";
        case ErrorCode::shape_mismatch: return "shape_mismatch";
        case ErrorCode::rank_mismatch: return "rank_mismatch";
        case ErrorCode::malformed_header: return "malformed_header";
        case ErrorCode::unsupported_dtype: return "unsupported_dtype";
        case ErrorCode::non_finite: return "non_finite";
        case ErrorCode::hermitian_violation: return "hermitian_violation";
        case ErrorCode::undefined_normalization: return "undefined_normalization";
        case ErrorCode::io_failure: return "io_failure";
        case ErrorCode::usage: return "usage";
        case ErrorCode::replay_mismatch: return "replay_mismatch";
    }
    return "unknown";
}

ErrorCategory category_of(ErrorCode code) {
    switch (code) {
        case ErrorCode::usage: return ErrorCategory::usage;
        case ErrorCode::io_failure: return ErrorCategory::io;
        default: return ErrorCategory::data;
    }
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace cnoise
