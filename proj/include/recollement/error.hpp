#pragma once

#include <stdexcept>
#include <string>

namespace recoll {

enum class ErrorCode {
    BadArgument,
    NotPrime,
    NonAssociative,
    BadUnit,
    NotFiniteDimensional,
    CharacteristicTooSmall,
    BudgetExceeded,
    AlgebraMismatch,
    NotIdempotent,
    NotAnIdeal,
    NotIdempotentIdeal,
    WrongCategory,
    NoSplitSurjection,
    InternalInconsistency,
    ParseError,
    NotFound,
    Io,
};

const char* error_code_name(ErrorCode c);

/// Library-wide exception. `detail` carries a machine-readable payload
/// (JSON text) when a check can name its counterexample.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& msg, std::string detail = {})
        : std::runtime_error(msg), code_(code), detail_(std::move(detail)) {}

    ErrorCode code() const { return code_; }
    const std::string& detail() const { return detail_; }

private:
    ErrorCode code_;
    std::string detail_;
};

} // namespace recoll
