#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pfz {

enum class Errc {
    ComponentOutOfRange,
    SumExceedsOne,
    EmptyInput,
    ParamOutOfDomain,
    InputOutOfRange,
    NegativeGeneratorValue,
    NonPositiveScalar,
    LengthMismatch,
    InvalidWeights,
    UnsupportedFamily,
    DegenerateComponent,
    NonIntegerLambda,
    UnknownOperator,
    InvalidProblem,
    ParseError,
    InternalInconsistency,
};

std::string_view errc_name(Errc code) noexcept;

/// Every validation failure in the library is reported through this type.
/// `code()` identifies the failure class; `what()` carries a one-line
/// diagnostic that names the offending value.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message);

    Errc code() const noexcept { return code_; }
    /// The diagnostic without the leading code name.
    const std::string& message() const noexcept { return message_; }

private:
    Errc code_;
    std::string message_;
};

}  // namespace pfz
