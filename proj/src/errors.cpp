#include "qcasimir/errors.hpp"

namespace qcasimir {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::NotDivisible: return "NotDivisible";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ZeroBase: return "ZeroBase";
    case Errc::RankTooSmall: return "RankTooSmall";
    case Errc::RankTooLarge: return "RankTooLarge";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::BarNotApplicable: return "BarNotApplicable";
    case Errc::WrongType: return "WrongType";
    case Errc::RankTooLargeForEnumeration: return "RankTooLargeForEnumeration";
    case Errc::RankMismatch: return "RankMismatch";
    case Errc::NotDominant: return "NotDominant";
    case Errc::GridMismatch: return "GridMismatch";
    case Errc::DegenerateEvaluation: return "DegenerateEvaluation";
    case Errc::PartitionTooLong: return "PartitionTooLong";
    case Errc::HalvingFailed: return "HalvingFailed";
    case Errc::SingularLeadingCoefficient: return "SingularLeadingCoefficient";
    case Errc::CertificateFailed: return "CertificateFailed";
    case Errc::WeightOutOfRange: return "WeightOutOfRange";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace qcasimir
