#ifndef UCLASS_ERRORS_HPP
#define UCLASS_ERRORS_HPP

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace uclass {

enum class ErrorKind {
    NearZeroConstantTerm,
    NonzeroInnerConstant,
    UnknownId,
    ParamOutOfRange,
    DenominatorVanishes,
    BoundaryTooClose,
    EvalNearZeroDenominator,
    SecondCoefficientVanishes,
    ArgumentOutOfDomain,
    InsufficientOrder,
    PartCPrecondition,
    ReplayMismatch,
    InvalidConfig,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. `kind()` identifies the contract
/// that was violated; evaluation failures also carry the offending point.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string &what);
    Error(ErrorKind kind, const std::string &what, std::complex<double> point);

    ErrorKind kind() const noexcept { return kind_; }
    const std::optional<std::complex<double>> &point() const noexcept { return point_; }

private:
    ErrorKind kind_;
    std::optional<std::complex<double>> point_;
};

} // namespace uclass

#endif
