#include "altmin/errors.hpp"

namespace altmin {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NonFiniteValue: return "NonFiniteValue";
        case ErrorCode::BracketFailure: return "BracketFailure";
        case ErrorCode::InvalidCoefficient: return "InvalidCoefficient";
        case ErrorCode::NoRoot: return "NoRoot";
        case ErrorCode::DegenerateStep: return "DegenerateStep";
        case ErrorCode::InvalidBound: return "InvalidBound";
        case ErrorCode::BlockMinFailure: return "BlockMinFailure";
        case ErrorCode::InnerBudgetExhausted: return "InnerBudgetExhausted";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::SingularBlock: return "SingularBlock";
        case ErrorCode::GenerationFailure: return "GenerationFailure";
        case ErrorCode::ConfigError: return "ConfigError";
        case ErrorCode::MissingFact: return "MissingFact";
        case ErrorCode::IoError: return "IoError";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::Unsupported: return "Unsupported";
    }
    return "Unknown";
}

}  // namespace altmin
