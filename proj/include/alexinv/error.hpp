#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace alexinv {

enum class ErrorKind {
    ZeroInput,
    NotPolynomial,
    UnsupportedDimension,
    InvalidAbelianization,
    NonTorsion,
    TrivialCharacterUnsupported,
    MissingSublinkData,
    BadWord,
    NonRationalInfinitelyNearPoint,
    NotReduced,
    NotCoprime,
    BadHodgeData,
    BadGerm,
    UseFacesForMultiComponent,
    TheoremViolation,
    Unsupported,
    Validation,
    Parse,
};

constexpr std::string_view to_string(ErrorKind k) {
    switch (k) {
    case ErrorKind::ZeroInput: return "ZeroInput";
    case ErrorKind::NotPolynomial: return "NotPolynomial";
    case ErrorKind::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorKind::InvalidAbelianization: return "InvalidAbelianization";
    case ErrorKind::NonTorsion: return "NonTorsion";
    case ErrorKind::TrivialCharacterUnsupported: return "TrivialCharacterUnsupported";
    case ErrorKind::MissingSublinkData: return "MissingSublinkData";
    case ErrorKind::BadWord: return "BadWord";
    case ErrorKind::NonRationalInfinitelyNearPoint: return "NonRationalInfinitelyNearPoint";
    case ErrorKind::NotReduced: return "NotReduced";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::BadHodgeData: return "BadHodgeData";
    case ErrorKind::BadGerm: return "BadGerm";
    case ErrorKind::UseFacesForMultiComponent: return "UseFacesForMultiComponent";
    case ErrorKind::TheoremViolation: return "TheoremViolation";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::Validation: return "Validation";
    case ErrorKind::Parse: return "Parse";
    }
    return "Unknown";
}

/// Input-shape problems (bad files, malformed words) as opposed to failed
/// mathematical preconditions. The CLI maps the two groups to different
/// exit codes.
constexpr bool is_validation_kind(ErrorKind k) {
    return k == ErrorKind::Validation || k == ErrorKind::Parse || k == ErrorKind::BadWord ||
           k == ErrorKind::BadGerm || k == ErrorKind::BadHodgeData;
}

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string &what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string &what) { throw Error(kind, what); }

} // namespace alexinv
