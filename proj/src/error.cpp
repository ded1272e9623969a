#include "heckezeros/error.hpp"

namespace hz {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::ZeroLeadingCoefficient: return "ZeroLeadingCoefficient";
    case Errc::OddIndex: return "OddIndex";
    case Errc::DivergentEvaluation: return "DivergentEvaluation";
    case Errc::BadWeight: return "BadWeight";
    case Errc::UnsupportedWeight: return "UnsupportedWeight";
    case Errc::InexactDivision: return "InexactDivision";
    case Errc::InsufficientPrecision: return "InsufficientPrecision";
    case Errc::BadNormalization: return "BadNormalization";
    case Errc::MissingEigenvalue: return "MissingEigenvalue";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::NegativeArgument: return "NegativeArgument";
    case Errc::NonpositiveArgument: return "NonpositiveArgument";
    case Errc::NotMonotone: return "NotMonotone";
    case Errc::TargetOutOfRange: return "TargetOutOfRange";
    case Errc::DivisorNearZero: return "DivisorNearZero";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::InvalidSpec: return "InvalidSpec";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& detail)
    : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

}  // namespace hz
