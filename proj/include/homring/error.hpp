#pragma once

/**
 * @file error.hpp
 * @brief Error classes shared by every homring module.
 *
 * All failures are reported through a single exception type carrying an
 * ErrorKind. The CLI maps each kind onto its own process exit code.
 */

#include <stdexcept>
#include <string>
#include <string_view>

namespace homring {

enum class ErrorKind {
    InvalidParameter,
    InvalidRing,
    NotLocal,
    WrongRingFamily,
    NotRational,
    ValidationFailed,
    NotGenerating,
    BudgetExceeded,
    BadPermutation,
    OutOfRange,
    NotTwoWeight,
    SingularSystem,
    InternalInvariantViolation,
    ParseError,
    UnknownPreset,
    IoError,
};

constexpr std::string_view to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::InvalidParameter: return "InvalidParameter";
        case ErrorKind::InvalidRing: return "InvalidRing";
        case ErrorKind::NotLocal: return "NotLocal";
        case ErrorKind::WrongRingFamily: return "WrongRingFamily";
        case ErrorKind::NotRational: return "NotRational";
        case ErrorKind::ValidationFailed: return "ValidationFailed";
        case ErrorKind::NotGenerating: return "NotGenerating";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::BadPermutation: return "BadPermutation";
        case ErrorKind::OutOfRange: return "OutOfRange";
        case ErrorKind::NotTwoWeight: return "NotTwoWeight";
        case ErrorKind::SingularSystem: return "SingularSystem";
        case ErrorKind::InternalInvariantViolation: return "InternalInvariantViolation";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::UnknownPreset: return "UnknownPreset";
        case ErrorKind::IoError: return "IoError";
    }
    return "Unknown";
}

/// Process exit code used by the CLI for each error class. 0 is success and
/// 1 is reserved for verification failures.
constexpr int exit_code(ErrorKind k) { return 10 + static_cast<int>(k); }

class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

   private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool cond, ErrorKind kind, const std::string& what) {
    if (!cond) fail(kind, what);
}

}  // namespace homring
