#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cyclicff {

enum class ErrorCode {
    NotPrime,
    CongruenceViolation,
    EllTooSmall,
    UnsupportedSize,
    DivisionByZeroPoly,
    ZeroPolynomial,
    ZeroDenominator,
    ZeroArgument,
    FactorProductMismatch,
    ZeroU,
    NormNotOne,
    ZeroInput,
    ZeroPair,
    DegenerateA,
    InvalidU,
    NotIrreducible,
    SearchExhausted,
    TowerMismatch,
    EvenDegreeViolation,
    IndexDivisibilityViolation,
    InvariantViolation,
    ParseError,
};

constexpr std::string_view error_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NotPrime: return "NotPrime";
        case ErrorCode::CongruenceViolation: return "CongruenceViolation";
        case ErrorCode::EllTooSmall: return "EllTooSmall";
        case ErrorCode::UnsupportedSize: return "UnsupportedSize";
        case ErrorCode::DivisionByZeroPoly: return "DivisionByZeroPoly";
        case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorCode::ZeroDenominator: return "ZeroDenominator";
        case ErrorCode::ZeroArgument: return "ZeroArgument";
        case ErrorCode::FactorProductMismatch: return "FactorProductMismatch";
        case ErrorCode::ZeroU: return "ZeroU";
        case ErrorCode::NormNotOne: return "NormNotOne";
        case ErrorCode::ZeroInput: return "ZeroInput";
        case ErrorCode::ZeroPair: return "ZeroPair";
        case ErrorCode::DegenerateA: return "DegenerateA";
        case ErrorCode::InvalidU: return "InvalidU";
        case ErrorCode::NotIrreducible: return "NotIrreducible";
        case ErrorCode::SearchExhausted: return "SearchExhausted";
        case ErrorCode::TowerMismatch: return "TowerMismatch";
        case ErrorCode::EvenDegreeViolation: return "EvenDegreeViolation";
        case ErrorCode::IndexDivisibilityViolation: return "IndexDivisibilityViolation";
        case ErrorCode::InvariantViolation: return "InvariantViolation";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

/// Domain error carrying a stable machine-readable code.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }
    std::string_view name() const noexcept { return error_name(code_); }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace cyclicff
