#pragma once

#include <stdexcept>
#include <string>

namespace slie {

// Stable machine-readable error codes; the CLI maps these onto exit codes
// and single-line diagnostics.
enum class ErrorCode {
    // pattern
    TooManyComponents,
    EmptyComponent,
    InvalidEpoch,
    LayoutMismatch,
    InvalidRange,
    // pairing backend
    EmptyDomainTag,
    InvalidPoint,
    InvalidScalar,
    // wkd-ibe
    RngFailure,
    ExpiryInPast,
    NotAnExtension,
    ExpiryExceedsParent,
    PatternMismatch,
    // hybrid
    PayloadTooLarge,
    EmptyContext,
    AuthenticationFailure,
    MalformedCiphertext,
    // lifecycle
    NotEligible,
    NewExpiryNotLater,
    UnknownRole,
    ExpiredKey,
    StoreUnavailable,
    // authority
    Unauthorized,
    NotFound,
    NotInitialized,
    // generic
    IoError,
    BadArgument,
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::TooManyComponents: return "TooManyComponents";
        case ErrorCode::EmptyComponent: return "EmptyComponent";
        case ErrorCode::InvalidEpoch: return "InvalidEpoch";
        case ErrorCode::LayoutMismatch: return "LayoutMismatch";
        case ErrorCode::InvalidRange: return "InvalidRange";
        case ErrorCode::EmptyDomainTag: return "EmptyDomainTag";
        case ErrorCode::InvalidPoint: return "InvalidPoint";
        case ErrorCode::InvalidScalar: return "InvalidScalar";
        case ErrorCode::RngFailure: return "RngFailure";
        case ErrorCode::ExpiryInPast: return "ExpiryInPast";
        case ErrorCode::NotAnExtension: return "NotAnExtension";
        case ErrorCode::ExpiryExceedsParent: return "ExpiryExceedsParent";
        case ErrorCode::PatternMismatch: return "PatternMismatch";
        case ErrorCode::PayloadTooLarge: return "PayloadTooLarge";
        case ErrorCode::EmptyContext: return "EmptyContext";
        case ErrorCode::AuthenticationFailure: return "AuthenticationFailure";
        case ErrorCode::MalformedCiphertext: return "MalformedCiphertext";
        case ErrorCode::NotEligible: return "NotEligible";
        case ErrorCode::NewExpiryNotLater: return "NewExpiryNotLater";
        case ErrorCode::UnknownRole: return "UnknownRole";
        case ErrorCode::ExpiredKey: return "ExpiredKey";
        case ErrorCode::StoreUnavailable: return "StoreUnavailable";
        case ErrorCode::Unauthorized: return "Unauthorized";
        case ErrorCode::NotFound: return "NotFound";
        case ErrorCode::NotInitialized: return "NotInitialized";
        case ErrorCode::IoError: return "IoError";
        case ErrorCode::BadArgument: return "BadArgument";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace slie
