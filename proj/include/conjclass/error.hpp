#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace conjclass {

enum class ErrorCode {
    ZeroDenominator,
    Parse,
    UnsupportedDimension,
    FieldOrDimensionMismatch,
    DimensionMismatch,
    NoFixedPoint,
    NotConjugate,
    UnsupportedClass,
    ZeroTranslation,
    NegativeAlphaUnsupported,
    NotFixedPointFree,
    Singular,
    NotSingular,
};

constexpr std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::ZeroDenominator: return "ZeroDenominator";
        case ErrorCode::Parse: return "Parse";
        case ErrorCode::UnsupportedDimension: return "UnsupportedDimension";
        case ErrorCode::FieldOrDimensionMismatch: return "FieldOrDimensionMismatch";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::NoFixedPoint: return "NoFixedPoint";
        case ErrorCode::NotConjugate: return "NotConjugate";
        case ErrorCode::UnsupportedClass: return "UnsupportedClass";
        case ErrorCode::ZeroTranslation: return "ZeroTranslation";
        case ErrorCode::NegativeAlphaUnsupported: return "NegativeAlphaUnsupported";
        case ErrorCode::NotFixedPointFree: return "NotFixedPointFree";
        case ErrorCode::Singular: return "Singular";
        case ErrorCode::NotSingular: return "NotSingular";
    }
    return "Unknown";
}

/// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace conjclass
