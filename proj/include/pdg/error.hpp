#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pdg {

enum class ErrorCode {
  // combinatorial maps
  NotPermutation,
  NotInvolution,
  HasFixedPoint,
  SizeMismatch,
  OddEulerDefect,
  EdgeOutOfRange,
  NotAdjacent,
  // chord diagrams
  LabelCountNotTwo,
  OddLength,
  InvalidToken,
  CutOutOfRange,
  EmptyCaravan,
  UnknownChord,
  // linear algebra
  NotABasis,
  NoSolution,
  // text and JSON input
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pdg
