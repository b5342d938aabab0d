#include "aurif/error.hpp"

namespace aurif {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::UnsupportedSymbol: return "UnsupportedSymbol";
    case Errc::NotSquareFree: return "NotSquareFree";
    case Errc::NotOddSquareFree: return "NotOddSquareFree";
    case Errc::NTooSmall: return "NTooSmall";
    case Errc::BadResidueClass: return "BadResidueClass";
    case Errc::InternalInconsistency: return "InternalInconsistency";
    case Errc::SearchCapExceeded: return "SearchCapExceeded";
    case Errc::InexactDivision: return "InexactDivision";
    case Errc::NonIntegerCoefficient: return "NonIntegerCoefficient";
    case Errc::NonIntegerStep: return "NonIntegerStep";
    case Errc::BadRadius: return "BadRadius";
    case Errc::BadConstantTerm: return "BadConstantTerm";
    case Errc::NonIntegralOracle: return "NonIntegralOracle";
    case Errc::NotAurifeuillianPoint: return "NotAurifeuillianPoint";
    case Errc::PrecisionTooLow: return "PrecisionTooLow";
    case Errc::RoundingFailed: return "RoundingFailed";
    case Errc::Usage: return "Usage";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& detail)
    : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

}  // namespace aurif
