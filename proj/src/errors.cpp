#include "uclass/errors.hpp"

namespace uclass {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::NearZeroConstantTerm: return "NearZeroConstantTerm";
    case ErrorKind::NonzeroInnerConstant: return "NonzeroInnerConstant";
    case ErrorKind::UnknownId: return "UnknownId";
    case ErrorKind::ParamOutOfRange: return "ParamOutOfRange";
    case ErrorKind::DenominatorVanishes: return "DenominatorVanishes";
    case ErrorKind::BoundaryTooClose: return "BoundaryTooClose";
    case ErrorKind::EvalNearZeroDenominator: return "EvalNearZeroDenominator";
    case ErrorKind::SecondCoefficientVanishes: return "SecondCoefficientVanishes";
    case ErrorKind::ArgumentOutOfDomain: return "ArgumentOutOfDomain";
    case ErrorKind::InsufficientOrder: return "InsufficientOrder";
    case ErrorKind::PartCPrecondition: return "PartCPrecondition";
    case ErrorKind::ReplayMismatch: return "ReplayMismatch";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string &what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
{
}

Error::Error(ErrorKind kind, const std::string &what, std::complex<double> point)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind), point_(point)
{
}

} // namespace uclass
