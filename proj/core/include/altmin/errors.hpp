#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace altmin {

enum class ErrorCode {
    NonFiniteValue,
    BracketFailure,
    InvalidCoefficient,
    NoRoot,
    DegenerateStep,
    InvalidBound,
    BlockMinFailure,
    InnerBudgetExhausted,
    DimensionMismatch,
    SingularBlock,
    GenerationFailure,
    ConfigError,
    MissingFact,
    IoError,
    InvalidArgument,
    Unsupported,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (the experiment runner in particular) can react per category.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace altmin
