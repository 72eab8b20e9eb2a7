#ifndef RMRES_ERROR_HPP
#define RMRES_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace rmres {

enum class ErrorKind {
    NotPrimePower,
    DivisionByZero,
    DimensionMismatch,
    IndexOutOfRange,
    ParameterOutOfRange,
    SpecMismatch,
    InvalidWitnessParams,
    RankDeficientForms,
    PreconditionViolated,
    TooLarge,
    CertificateFailed,
    DegenerateType,
    InternalMismatch,
};

constexpr std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NotPrimePower: return "NotPrimePower";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::ParameterOutOfRange: return "ParameterOutOfRange";
        case ErrorKind::SpecMismatch: return "SpecMismatch";
        case ErrorKind::InvalidWitnessParams: return "InvalidWitnessParams";
        case ErrorKind::RankDeficientForms: return "RankDeficientForms";
        case ErrorKind::PreconditionViolated: return "PreconditionViolated";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::CertificateFailed: return "CertificateFailed";
        case ErrorKind::DegenerateType: return "DegenerateType";
        case ErrorKind::InternalMismatch: return "InternalMismatch";
    }
    return "Unknown";
}

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace rmres

#endif
