#ifndef ORTHOREP_ERROR_HPP
#define ORTHOREP_ERROR_HPP

#include <stdexcept>
#include <string>

namespace orthorep {

enum class ErrorCode {
    ParseError,
    NonSquare,
    DimensionMismatch,
    IndexOutOfRange,
    SingularMatrix,
    InvalidSkew,
    NotOrthogonal,
    NotSpecialOrthogonal,
    MinusOneEigenvalue,
    ZeroPerturbation,
    DimensionTooLarge,
    ColumnsMismatch,
    ModeInapplicable,
    BadRank,
};

/// Library-wide exception carrying a stable error code. The CLI maps codes
/// onto exit statuses, so the code of a given failure must never change.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& msg)
        : std::runtime_error(msg), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::NonSquare: return "NonSquare";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::SingularMatrix: return "SingularMatrix";
        case ErrorCode::InvalidSkew: return "InvalidSkew";
        case ErrorCode::NotOrthogonal: return "NotOrthogonal";
        case ErrorCode::NotSpecialOrthogonal: return "NotSpecialOrthogonal";
        case ErrorCode::MinusOneEigenvalue: return "MinusOneEigenvalue";
        case ErrorCode::ZeroPerturbation: return "ZeroPerturbation";
        case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
        case ErrorCode::ColumnsMismatch: return "ColumnsMismatch";
        case ErrorCode::ModeInapplicable: return "ModeInapplicable";
        case ErrorCode::BadRank: return "BadRank";
    }
    return "UnknownError";
}

} // namespace orthorep

#endif
