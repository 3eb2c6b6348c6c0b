#include "lapinv/error.hpp"

namespace lapinv {

std::string_view errc_name(Errc code) noexcept {
    switch (code) {
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ExpMixing: return "ExpMixing";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::UnknownSymbol: return "UnknownSymbol";
    case Errc::UnsupportedOrder: return "UnsupportedOrder";
    case Errc::NotNormalForm: return "NotNormalForm";
    case Errc::NotInKernel: return "NotInKernel";
    case Errc::ZeroFunction: return "ZeroFunction";
    case Errc::NotAnXInvariant: return "NotAnXInvariant";
    case Errc::NotAYInvariant: return "NotAYInvariant";
    case Errc::NonElementaryIntegral: return "NonElementaryIntegral";
    case Errc::SingularBasePoint: return "SingularBasePoint";
    case Errc::ZeroInvariant: return "ZeroInvariant";
    case Errc::GeneratorExcluded: return "GeneratorExcluded";
    case Errc::NotLinearInTarget: return "NotLinearInTarget";
    case Errc::TargetAbsent: return "TargetAbsent";
    case Errc::NonTermination: return "NonTermination";
    case Errc::StrictMode: return "StrictMode";
    case Errc::VerificationFailed: return "VerificationFailed";
    }
    return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

Error::Error(Errc code, const std::string& what, std::size_t position)
    : std::runtime_error(std::string(errc_name(code)) + " at " + std::to_string(position) + ": " + what),
      code_(code), position_(position) {}

} // namespace lapinv
