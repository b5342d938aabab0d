#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace aurif {

/// Failure categories raised by the library. The CLI prints the name verbatim.
enum class Errc {
  InvalidArgument,
  UnsupportedSymbol,
  NotSquareFree,
  NotOddSquareFree,
  NTooSmall,
  BadResidueClass,
  InternalInconsistency,
  SearchCapExceeded,
  InexactDivision,
  NonIntegerCoefficient,
  NonIntegerStep,
  BadRadius,
  BadConstantTerm,
  NonIntegralOracle,
  NotAurifeuillianPoint,
  PrecisionTooLow,
  RoundingFailed,
  Usage,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace aurif
