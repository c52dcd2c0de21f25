#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qcasimir {

enum class Errc {
  NotDivisible,
  DivisionByZero,
  ZeroBase,
  RankTooSmall,
  RankTooLarge,
  LengthMismatch,
  IndexOutOfRange,
  BarNotApplicable,
  WrongType,
  RankTooLargeForEnumeration,
  RankMismatch,
  NotDominant,
  GridMismatch,
  DegenerateEvaluation,
  PartitionTooLong,
  HalvingFailed,
  SingularLeadingCoefficient,
  CertificateFailed,
  WeightOutOfRange,
  InvalidArgument,
  ParseError,
};

std::string_view errc_name(Errc code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace qcasimir
