#include "pfz/error.hpp"

namespace pfz {

std::string_view errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::ComponentOutOfRange: return "ComponentOutOfRange";
        case Errc::SumExceedsOne: return "SumExceedsOne";
        case Errc::EmptyInput: return "EmptyInput";
        case Errc::ParamOutOfDomain: return "ParamOutOfDomain";
        case Errc::InputOutOfRange: return "InputOutOfRange";
        case Errc::NegativeGeneratorValue: return "NegativeGeneratorValue";
        case Errc::NonPositiveScalar: return "NonPositiveScalar";
        case Errc::LengthMismatch: return "LengthMismatch";
        case Errc::InvalidWeights: return "InvalidWeights";
        case Errc::UnsupportedFamily: return "UnsupportedFamily";
        case Errc::DegenerateComponent: return "DegenerateComponent";
        case Errc::NonIntegerLambda: return "NonIntegerLambda";
        case Errc::UnknownOperator: return "UnknownOperator";
        case Errc::InvalidProblem: return "InvalidProblem";
        case Errc::ParseError: return "ParseError";
        case Errc::InternalInconsistency: return "InternalInconsistency";
    }
    return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code), message_(message) {}

}  // namespace pfz
