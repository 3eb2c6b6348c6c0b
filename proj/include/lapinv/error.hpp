#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lapinv {

/// Failure categories raised by the library. Every public operation reports
/// errors by throwing lapinv::Error carrying one of these codes.
enum class Errc {
    DivisionByZero,
    ExpMixing,
    SyntaxError,
    UnknownSymbol,
    UnsupportedOrder,
    NotNormalForm,
    NotInKernel,
    ZeroFunction,
    NotAnXInvariant,
    NotAYInvariant,
    NonElementaryIntegral,
    SingularBasePoint,
    ZeroInvariant,
    GeneratorExcluded,
    NotLinearInTarget,
    TargetAbsent,
    NonTermination,
    StrictMode,
    VerificationFailed,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what);
    Error(Errc code, const std::string& what, std::size_t position);

    Errc code() const noexcept { return code_; }
    /// Byte offset into the parsed text, for SyntaxError / UnknownSymbol.
    std::optional<std::size_t> position() const noexcept { return position_; }

private:
    Errc code_;
    std::optional<std::size_t> position_;
};

} // namespace lapinv
