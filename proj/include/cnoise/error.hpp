#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cnoise {

/// Machine-readable failure reasons. Each code belongs to one category, which
/// the CLI maps onto its exit-code contract.
enum class ErrorCode {
    invalid_argument,
    shape_mismatch,
    rank_mismatch,
    malformed_header,
    unsupported_dtype,
    non_finite,
    hermitian_violation,
    undefined_normalization,
    io_failure,
    usage,
    replay_mismatch,
};

enum class ErrorCategory { usage, data, io };

std::string_view to_string(ErrorCode code);
ErrorCategory category_of(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message);

    ErrorCode code() const noexcept { return code_; }
    ErrorCategory category() const noexcept { return category_of(code_); }

private:
    ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace cnoise
