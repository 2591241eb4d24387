#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace stratakit {

enum class ErrorKind {
    ParseError,
    NonOrthogonalGenerator,
    InfiniteFiniteGroup,
    IncompatibleBlocks,
    DimensionMismatch,
    InexactRotation,
    NonProductStabilizer,
    NumericalAmbiguity,
    WitnessSearchFailed,
    InconsistentStratumDimension,
    NoUniqueMinimum,
    ClassNotFound,
    CoisotropyIdentityViolation,
    NonInvariantPolynomial,
    NotOnZeroLevel,
    NotExampleSpec,
    VerificationFailure,
    IoError,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

inline std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NonOrthogonalGenerator: return "NonOrthogonalGenerator";
    case ErrorKind::InfiniteFiniteGroup: return "InfiniteFiniteGroup";
    case ErrorKind::IncompatibleBlocks: return "IncompatibleBlocks";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::InexactRotation: return "InexactRotation";
    case ErrorKind::NonProductStabilizer: return "NonProductStabilizer";
    case ErrorKind::NumericalAmbiguity: return "NumericalAmbiguity";
    case ErrorKind::WitnessSearchFailed: return "WitnessSearchFailed";
    case ErrorKind::InconsistentStratumDimension: return "InconsistentStratumDimension";
    case ErrorKind::NoUniqueMinimum: return "NoUniqueMinimum";
    case ErrorKind::ClassNotFound: return "ClassNotFound";
    case ErrorKind::CoisotropyIdentityViolation: return "CoisotropyIdentityViolation";
    case ErrorKind::NonInvariantPolynomial: return "NonInvariantPolynomial";
    case ErrorKind::NotOnZeroLevel: return "NotOnZeroLevel";
    case ErrorKind::NotExampleSpec: return "NotExampleSpec";
    case ErrorKind::VerificationFailure: return "VerificationFailure";
    case ErrorKind::IoError: return "IoError";
    }
    return "Unknown";
}

} // namespace stratakit
