#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hz {

enum class Errc {
  ZeroLeadingCoefficient,
  OddIndex,
  DivergentEvaluation,
  BadWeight,
  UnsupportedWeight,
  InexactDivision,
  InsufficientPrecision,
  BadNormalization,
  MissingEigenvalue,
  DegreeMismatch,
  NegativeArgument,
  NonpositiveArgument,
  NotMonotone,
  TargetOutOfRange,
  DivisorNearZero,
  OutOfRange,
  EmptyInput,
  InvalidSpec,
  ParseError,
};

std::string_view errc_name(Errc code);

// All library failures are reported through this type; `code()` identifies
// the condition, `what()` carries a human readable diagnostic.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace hz
